#include "fibercone/report.hpp"

#include <algorithm>
#include <sstream>

namespace fibercone {

using nlohmann::json;

FacetFailure describe_failure(const ColonReport& report) {
  FacetFailure out;
  out.alpha = report.facet.alpha();
  out.facet = report.facet.vertices().vertices();
  for (const auto& g : report.computed_generators) {
    out.computed_generators.push_back(g.vertices());
    if (g.size() != 1) out.offending.push_back(g.vertices());
  }
  out.predicted_lg = report.predicted_lg;
  const auto computed = report.linear_generators();
  std::vector<Vertex> only_one_side;
  std::set_symmetric_difference(computed.begin(), computed.end(), report.predicted_lg.begin(),
                                report.predicted_lg.end(), std::back_inserter(only_one_side));
  for (const auto& v : only_one_side) out.offending.push_back({v});
  return out;
}

void to_json(json& j, const Vertex& v) { j = json::array({v.a, v.b}); }

void from_json(const json& j, Vertex& v) {
  v.a = j.at(0).get<int>();
  v.b = j.at(1).get<int>();
}

void to_json(json& j, const InvariantReport& r) {
  j = json{{"c", r.c},
           {"d", r.d},
           {"prediction_only", r.prediction_only},
           {"facet_count", r.facet_count ? json(*r.facet_count) : json(nullptr)},
           {"h_vector", r.h_vector ? json(r.h_vector->h) : json(nullptr)},
           {"dim", r.dim},
           {"reg", r.reg},
           {"a_invariant", r.a_invariant},
           {"reduction_number", r.reduction_number},
           {"gorenstein", r.gorenstein},
           {"closed_form_match", r.closed_form_match}};
}

void from_json(const json& j, InvariantReport& r) {
  r.c = j.at("c").get<int>();
  r.d = j.at("d").get<int>();
  r.prediction_only = j.at("prediction_only").get<bool>();
  r.facet_count = j.at("facet_count").is_null() ? std::nullopt : std::optional<Count>(j.at("facet_count").get<Count>());
  if (j.at("h_vector").is_null())
    r.h_vector.reset();
  else
    r.h_vector = HVector{j.at("h_vector").get<std::vector<Count>>()};
  r.dim = j.at("dim").get<int>();
  r.reg = j.at("reg").get<int>();
  r.a_invariant = j.at("a_invariant").get<int>();
  r.reduction_number = j.at("reduction_number").get<int>();
  r.gorenstein = j.at("gorenstein").get<bool>();
  r.closed_form_match = j.at("closed_form_match").get<bool>();
}

namespace {

json failure_json(const FacetFailure& f) {
  return json{{"alpha", f.alpha},
              {"facet", f.facet},
              {"computed_generators", f.computed_generators},
              {"predicted_lg", f.predicted_lg},
              {"offending", f.offending}};
}

FacetFailure failure_from(const json& j) {
  FacetFailure f;
  f.alpha = j.at("alpha").get<int>();
  f.facet = j.at("facet").get<std::vector<Vertex>>();
  f.computed_generators = j.at("computed_generators").get<std::vector<std::vector<Vertex>>>();
  f.predicted_lg = j.at("predicted_lg").get<std::vector<Vertex>>();
  f.offending = j.at("offending").get<std::vector<std::vector<Vertex>>>();
  return f;
}

}  // namespace

void to_json(json& j, const ReportEnvelope& e) {
  json failures = json::array();
  for (const auto& f : e.verification.failures) failures.push_back(failure_json(f));
  json oracle_rows = json::array();
  for (const auto& r : e.oracle.rows) oracle_rows.push_back({{"t", r.t}, {"fiber", r.fiber}, {"faces", r.faces}});

  j = json{{"schema_version", e.schema_version},
           {"tool_version", e.tool_version},
           {"command", e.command},
           {"n", e.n},
           {"normalized", e.normalized},
           {"status", e.status},
           {"invariants", e.invariants},
           {"predicted", e.predicted},
           {"verification",
            {{"ran", e.verification.ran},
             {"linear_quotients", e.verification.linear_quotients},
             {"facets_checked", e.verification.facets_checked},
             {"mutation", e.verification.mutation},
             {"failures", failures}}},
           {"oracle",
            {{"ran", e.oracle.ran}, {"arithmetic", e.oracle.arithmetic}, {"rows", oracle_rows}, {"pass", e.oracle.pass}}}};
  if (e.hilbert)
    j["hilbert"] = {{"by_faces", e.hilbert->by_faces},
                    {"by_h_polynomial", e.hilbert->by_h_polynomial},
                    {"agree", e.hilbert->agree}};
  else
    j["hilbert"] = nullptr;
  if (e.timings_ms) j["timings_ms"] = *e.timings_ms;
}

void from_json(const json& j, ReportEnvelope& e) {
  e.schema_version = j.at("schema_version").get<int>();
  e.tool_version = j.at("tool_version").get<std::string>();
  e.command = j.at("command").get<std::string>();
  e.n = j.at("n").get<std::vector<int>>();
  e.normalized = j.at("normalized").get<bool>();
  e.status = j.at("status").get<std::string>();
  e.invariants = j.at("invariants").get<InvariantReport>();
  e.predicted = j.at("predicted").get<InvariantReport>();

  const auto& v = j.at("verification");
  e.verification.ran = v.at("ran").get<bool>();
  e.verification.linear_quotients = v.at("linear_quotients").get<bool>();
  e.verification.facets_checked = v.at("facets_checked").get<Count>();
  e.verification.mutation = v.at("mutation").get<std::string>();
  e.verification.failures.clear();
  for (const auto& f : v.at("failures")) e.verification.failures.push_back(failure_from(f));

  const auto& o = j.at("oracle");
  e.oracle.ran = o.at("ran").get<bool>();
  e.oracle.arithmetic = o.at("arithmetic").get<std::string>();
  e.oracle.pass = o.at("pass").get<bool>();
  e.oracle.rows.clear();
  for (const auto& r : o.at("rows"))
    e.oracle.rows.push_back({r.at("t").get<int>(), r.at("fiber").get<Count>(), r.at("faces").get<Count>()});

  if (j.at("hilbert").is_null()) {
    e.hilbert.reset();
  } else {
    const auto& h = j.at("hilbert");
    e.hilbert = HilbertWindow{h.at("by_faces").get<std::vector<Count>>(),
                              h.at("by_h_polynomial").get<std::vector<Count>>(), h.at("agree").get<bool>()};
  }
  if (j.contains("timings_ms"))
    e.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  else
    e.timings_ms.reset();
}

std::string to_json_string(const ReportEnvelope& e, int indent) { return json(e).dump(indent); }

ReportEnvelope parse_envelope(const std::string& text) { return json::parse(text).get<ReportEnvelope>(); }

std::string to_csv_row(const ReportEnvelope& e) {
  const auto& r = e.invariants;
  std::ostringstream os;
  os << r.c << ',' << r.d << ',';
  if (r.facet_count) os << *r.facet_count;
  os << ',' << r.reg << ',' << r.a_invariant << ',' << (r.gorenstein ? "true" : "false") << ','
     << (e.status == "prediction-only" ? "prediction-only" : e.status == "pass" ? "true" : "false");
  return os.str();
}

namespace {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

}  // namespace

std::string to_text(const ReportEnvelope& e) {
  const auto& r = e.invariants;
  std::ostringstream os;
  os << "scroll (" << join(e.n) << ")  c=" << r.c << " d=" << r.d << "  [" << e.command << "]\n";
  if (e.normalized) os << "  note: block degrees were sorted\n";
  if (r.prediction_only) os << "  regime: c < d + 4, closed-form predictions only\n";
  if (r.facet_count) os << "  facets            " << *r.facet_count << '\n';
  if (r.h_vector) os << "  h-vector          (" << join(r.h_vector->h) << ")\n";
  os << "  dim               " << r.dim << "   (closed form " << e.predicted.dim << ")\n"
     << "  reg               " << r.reg << "   (closed form " << e.predicted.reg << ")\n"
     << "  a-invariant       " << r.a_invariant << "   (closed form " << e.predicted.a_invariant << ")\n"
     << "  reduction number  " << r.reduction_number << "   (closed form " << e.predicted.reduction_number << ")\n"
     << "  gorenstein        " << (r.gorenstein ? "yes" : "no") << "   (closed form "
     << (e.predicted.gorenstein ? "yes" : "no") << ")\n";
  if (e.hilbert)
    os << "  hilbert window    faces (" << join(e.hilbert->by_faces) << ")  h-poly ("
       << join(e.hilbert->by_h_polynomial) << ")  " << (e.hilbert->agree ? "agree" : "DISAGREE") << '\n';
  if (e.verification.ran) {
    os << "  linear quotients  " << (e.verification.linear_quotients ? "certified" : "FAILED") << " over "
       << e.verification.facets_checked << " facets";
    if (e.verification.mutation != "none") os << " (rule mutation " << e.verification.mutation << ")";
    os << '\n';
    for (const auto& f : e.verification.failures) {
      os << "    alpha " << f.alpha << " facet {" << join(f.facet) << "}\n      offending:";
      for (const auto& s : f.offending) os << " {" << join(s) << "}";
      os << '\n';
    }
  }
  if (e.oracle.ran) {
    os << "  oracle (" << e.oracle.arithmetic << ")  " << (e.oracle.pass ? "agrees" : "DISAGREES") << '\n';
    for (const auto& row : e.oracle.rows)
      os << "    t=" << row.t << "  fiber " << row.fiber << "  faces " << row.faces << '\n';
  }
  if (e.timings_ms)
    for (const auto& [k, v] : *e.timings_ms) os << "  time " << k << ": " << v << " ms\n";
  os << "  status            " << e.status << '\n';
  return os.str();
}

}  // namespace fibercone
