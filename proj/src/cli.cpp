#include "fibercone/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "fibercone/errors.hpp"
#include "fibercone/facet_complex.hpp"
#include "fibercone/invariants.hpp"
#include "fibercone/oracle.hpp"

namespace fibercone::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw PreconditionError("unknown format '" + name + "' (expected json, csv or text)");
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t\r"));
    item.erase(item.find_last_not_of(" \t\r") + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse block degree '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("cannot parse block degree '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw PreconditionError("empty scroll type");
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Prepared {
  ScrollSpec spec;
  bool normalized;
};

Prepared prepare(const RunConfig& config) {
  bool reordered = false;
  ScrollSpec spec = ScrollSpec::normalized(config.n, &reordered);
  if (spec.c() < 2) throw PreconditionError("c must be at least 2 for the scroll ideal to have minors");
  return {spec, reordered};
}

ReportEnvelope base_envelope(const char* command, const Prepared& p) {
  ReportEnvelope e;
  e.tool_version = FIBERCONE_VERSION;
  e.command = command;
  e.n = p.spec.degrees();
  e.normalized = p.normalized;
  e.predicted = closed_form(p.spec.c(), p.spec.d());
  return e;
}

void fill_from_analysis(ReportEnvelope& e, const Analysis& a, RuleMutation mutation) {
  e.invariants = a.report;
  e.verification.ran = true;
  e.verification.linear_quotients = a.quotients.pass;
  e.verification.facets_checked = static_cast<Count>(a.quotients.reports.size());
  e.verification.mutation = to_string(mutation);
  for (const auto* r : a.quotients.failures()) e.verification.failures.push_back(describe_failure(*r));
  if (a.quotients.pass) {
    HilbertWindow w;
    for (const auto& [t, v] : a.hilbert.hf) w.by_faces.push_back(v);
    for (const auto& [t, v] : a.hilbert.hf_from_h) w.by_h_polynomial.push_back(v);
    w.agree = a.hilbert.paths_agree();
    e.hilbert = w;
  }
}

oracle::OracleOptions oracle_options(const RunConfig& config) {
  oracle::OracleOptions o;
  o.capacity = config.capacity;
  if (config.modulus == "rational") {
    o.arithmetic = oracle::Arithmetic::kRational;
  } else {
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(config.modulus, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != config.modulus.size() || used == 0)
      throw PreconditionError("--modulus must be a prime or 'rational'");
    o.prime = p;
    oracle::PrimeField check(p);  // validates primality
  }
  return o;
}

}  // namespace

ReportEnvelope invariants_envelope(const RunConfig& config, int* exit_code) {
  const auto start = Clock::now();
  const Prepared p = prepare(config);
  ReportEnvelope e = base_envelope("invariants", p);
  int code = kPass;
  if (!p.spec.has_tree_regime()) {
    e.invariants = e.predicted;
    e.status = "prediction-only";
    code = kPredictionOnly;
  } else {
    AnalysisOptions opts;
    opts.hilbert_window = config.hilbert_window;
    opts.quotients.mutation = config.mutation;
    const Analysis a = analyze(p.spec, opts);
    fill_from_analysis(e, a, config.mutation);
    e.status = a.pass() ? "pass" : "mismatch";
    code = a.pass() ? kPass : kMismatch;
  }
  if (config.timings) e.timings_ms = std::map<std::string, double>{{"total", ms_since(start)}};
  if (exit_code) *exit_code = code;
  return e;
}

ReportEnvelope verify_envelope(const RunConfig& config, int* exit_code) {
  const auto start = Clock::now();
  const Prepared p = prepare(config);
  if (!p.spec.has_tree_regime())
    throw UnsupportedRegimeError("verify needs c >= d + 4; use 'invariants' for closed-form predictions");
  const auto oracle_opts = oracle_options(config);
  ReportEnvelope e = base_envelope("verify", p);

  AnalysisOptions opts;
  opts.hilbert_window = config.hilbert_window;
  opts.quotients.mutation = config.mutation;
  const Analysis a = analyze(p.spec, opts);
  fill_from_analysis(e, a, config.mutation);
  const double analysis_ms = ms_since(start);

  const auto oracle_start = Clock::now();
  const auto table = oracle::cross_check(p.spec, a.facets.facets, config.t_max, oracle_opts);
  e.oracle.ran = true;
  e.oracle.arithmetic = config.modulus;
  e.oracle.pass = table.pass;
  for (const auto& row : table.rows) e.oracle.rows.push_back({row.t, row.fiber, row.faces});

  const bool ok = a.pass() && table.pass;
  e.status = ok ? "pass" : "mismatch";
  if (config.timings)
    e.timings_ms = std::map<std::string, double>{{"analysis", analysis_ms}, {"oracle", ms_since(oracle_start)}};
  if (exit_code) *exit_code = ok ? kPass : kMismatch;
  return e;
}

std::string render(const ReportEnvelope& e, Format format) {
  switch (format) {
    case Format::kJson: return to_json_string(e) + "\n";
    case Format::kCsv: return std::string(kCsvHeader) + "\n" + to_csv_row(e) + "\n";
    case Format::kText: return to_text(e);
  }
  return {};
}

namespace {

const char* extension(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kText: return "txt";
  }
  return "txt";
}

std::string degrees_tag(const std::vector<int>& n) {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "-" : "") + std::to_string(n[i]);
  return s;
}

// Writes to the output directory when one is configured, else to `out`.
void emit(const RunConfig& config, const std::string& stem, const std::string& body, std::ostream& out,
          std::ostream& err) {
  if (!config.output_dir) {
    out << body;
    return;
  }
  std::filesystem::create_directories(*config.output_dir);
  const auto path = std::filesystem::path(*config.output_dir) / (stem + "." + extension(config.format));
  std::ofstream file(path);
  if (!file) throw PreconditionError("cannot write " + path.string());
  file << body;
  err << "wrote " << path.string() << '\n';
}

json facets_json(const FacetEnumeration& facets, bool with_trees) {
  const auto& ctx = *facets.context;
  json groups = json::array();
  for (const auto& g : facets.groups) {
    json members = json::array();
    for (std::size_t i = g.begin; i < g.end; ++i) {
      const auto& f = facets.facets[i];
      json item{{"vertices", f.vertices().vertices()}};
      if (with_trees) {
        const auto tree = facet_tree(f);
        json children = json::array();
        for (const auto& [node, kids] : tree.children)
          if (!kids.empty()) children.push_back({{"node", node}, {"children", kids}});
        item["tree"] = children;
      }
      members.push_back(item);
    }
    groups.push_back({{"alpha", g.alpha},
                      {"leaves", ctx.profile(g.alpha).leaves},
                      {"ell", ctx.profile(g.alpha).ell},
                      {"facets", members}});
  }
  return json{{"n", ctx.spec().degrees()},
              {"c", ctx.c()},
              {"d", ctx.d()},
              {"facet_count", facets.facets.size()},
              {"groups", groups}};
}

std::string facets_text(const FacetEnumeration& facets, bool with_trees) {
  std::ostringstream os;
  const auto& ctx = *facets.context;
  os << "# facets of the initial complex for " << ctx.spec() << ": " << facets.facets.size() << '\n';
  for (const auto& g : facets.groups) {
    os << "# alpha " << g.alpha << " leaves";
    for (const auto& v : ctx.profile(g.alpha).leaves) os << ' ' << v;
    os << '\n';
    for (std::size_t i = g.begin; i < g.end; ++i) {
      const auto& f = facets.facets[i];
      os << g.alpha << ' ' << f.vertices() << '\n';
      if (with_trees) {
        const auto tree = facet_tree(f);
        for (const auto& [node, kids] : tree.children) {
          if (kids.empty()) continue;
          os << "    " << node << " ->";
          for (const auto& k : kids) os << ' ' << k;
          os << '\n';
        }
      }
    }
  }
  return os.str();
}

int run_selftest(std::ostream& out) {
  struct Check {
    const char* name;
    bool (*fn)();
  };
  static const Check checks[] = {
      {"leaves set of (2,2,4,4) at alpha 2",
       [] {
         const auto p = leaves_profile(ScrollSpec({2, 2, 4, 4}), 2);
         return p.leaves == std::vector<Vertex>{{2, 3}, {3, 4}, {4, 5}, {5, 6}, {10, 11}, {11, 12}};
       }},
      {"first facet of (2,2,4,4) at alpha 2 is a facet",
       [] { return first_facet(ScrollSpec({2, 2, 4, 4}), 2).size() == 16; }},
      {"linear generators of the (2,4,5) example facet",
       [] {
         const auto ctx = make_context(ScrollSpec({2, 4, 5}));
         const std::vector<Vertex> vs{{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 8}, {1, 9},
                                      {1, 11}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {9, 11}, {10, 11}};
         const VertexSet s(ctx->c(), vs);
         const auto alpha = ctx->alpha_of_leaves(VertexSet(ctx->c(), hasse_diagram(s, {1, 11}).leaves()));
         if (!alpha || !is_facet(*ctx, s)) return false;
         std::vector<Vertex> slice;
         for (const auto& v : predict_lg(Facet(ctx, *alpha, s)))
           if (v.a == 1) slice.push_back(v);
         return slice == std::vector<Vertex>{{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 9}};
       }},
      {"linear quotients for (5)", [] { return verify_linear_quotients(ScrollSpec({5})).pass; }},
      {"linear quotients for (2,4)", [] { return verify_linear_quotients(ScrollSpec({2, 4})).pass; }},
      {"oracle agrees with the complex for (5), t <= 3",
       [] { return oracle::cross_check(ScrollSpec({5}), 3).pass; }},
      {"closed form (12,4)",
       [] {
         const auto r = closed_form(12, 4);
         return r.reg == 8 && r.a_invariant == -8 && r.dim == 16 && !r.gorenstein;
       }},
  };
  bool all = true;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << c.name << '\n';
    all = all && ok;
  }
  return all ? kPass : kMismatch;
}

int run_batch(const RunConfig& config, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream body;
  if (config.format == Format::kCsv) body << kCsvHeader << '\n';
  std::string line;
  int line_no = 0;
  int code = kPass;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      RunConfig c = config;
      c.n = parse_degrees(line);
      int line_code = kPass;
      const auto e = invariants_envelope(c, &line_code);
      if (line_code == kMismatch) code = std::max<int>(code, kMismatch);
      switch (config.format) {
        case Format::kCsv: body << to_csv_row(e) << '\n'; break;
        case Format::kJson: body << to_json_string(e, -1) << '\n'; break;
        case Format::kText: body << to_text(e) << '\n'; break;
      }
    } catch (const Error& ex) {
      err << path << ':' << line_no << ": " << ex.what() << '\n';
      code = std::max<int>(code, kUsage);
    }
  }
  emit(config, "batch_" + std::filesystem::path(path).stem().string(), body.str(), out, err);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber cones of rational normal scrolls: initial complex, linear quotients, invariants", "fibercone"};
  app.require_subcommand(1);

  RunConfig config;
  std::string n_text;
  std::string format_text = "text";
  std::string mutate = "none";
  std::string batch_path;
  std::string batch_format = "csv";
  bool with_trees = false;

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* opt = sub->add_option("--n", n_text, "block degrees, comma separated (e.g. 2,2,4,4)");
    if (needs_n) opt->required();
    sub->add_option("--format", format_text, "json, csv or text")->capture_default_str();
    sub->add_option("--output-dir", config.output_dir, "write the report into this directory");
  };
  auto add_checks = [&](CLI::App* sub) {
    sub->add_option("--t-max", config.t_max, "largest degree for the oracle cross-check")->capture_default_str();
    sub->add_option("--modulus", config.modulus, "prime for the oracle, or 'rational'")->capture_default_str();
    sub->add_option("--capacity", config.capacity, "largest number of minor products per degree")
        ->capture_default_str();
    sub->add_option("--hilbert-window", config.hilbert_window, "degrees compared between the two Hilbert paths")
        ->capture_default_str();
    sub->add_option("--mutate-rule", mutate, "test hook: break one generator rule (a, b, c1, c2)")
        ->capture_default_str();
    sub->add_flag("--timings", config.timings, "include wall-clock timings (output is then not reproducible)");
  };

  auto* inv = app.add_subcommand("invariants", "regularity, a-invariant, reduction number, Gorensteinness");
  add_common(inv, true);
  add_checks(inv);
  auto* ver = app.add_subcommand("verify", "certify linear quotients and cross-check with the minors oracle");
  add_common(ver, true);
  add_checks(ver);
  auto* fac = app.add_subcommand("facets", "list the facets of the initial complex");
  add_common(fac, true);
  fac->add_flag("--trees", with_trees, "include each facet's containment tree");
  auto* bat = app.add_subcommand("batch", "one scroll type per line; CSV summary by default");
  bat->add_option("file", batch_path, "input file")->required();
  bat->add_option("--format", batch_format, "json, csv or text")->capture_default_str();
  bat->add_option("--output-dir", config.output_dir, "write the summary into this directory");
  add_checks(bat);
  auto* self = app.add_subcommand("selftest", "quick built-in checks against worked examples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!config.output_dir)
      if (const char* dir = std::getenv("FIBERCONE_OUTPUT_DIR"); dir && *dir) config.output_dir = dir;
    config.format = parse_format(bat->parsed() ? batch_format : format_text);
    config.mutation = parse_rule_mutation(mutate);
    if (config.t_max < 0) throw PreconditionError("--t-max must be non-negative");
    if (!n_text.empty()) {
      config.n = parse_degrees(n_text);
      if (!std::is_sorted(config.n.begin(), config.n.end()))
        err << "note: block degrees sorted to non-decreasing order\n";
    }

    if (self->parsed()) return run_selftest(out);
    if (bat->parsed()) return run_batch(config, batch_path, out, err);

    const std::string tag = degrees_tag([&] {
      auto n = config.n;
      std::sort(n.begin(), n.end());
      return n;
    }());
    if (fac->parsed()) {
      const Prepared p = prepare(config);
      const auto facets = enumerate_facets(p.spec);
      std::string body;
      if (config.format == Format::kJson) {
        body = facets_json(facets, with_trees).dump(2) + "\n";
      } else if (config.format == Format::kCsv) {
        std::ostringstream os;
        os << "alpha,vertices\n";
        for (const auto& f : facets.facets) {
          os << f.alpha() << ",\"";
          const auto vs = f.vertices().vertices();
          for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
          os << "\"\n";
        }
        body = os.str();
      } else {
        body = facets_text(facets, with_trees);
      }
      emit(config, "facets_" + tag, body, out, err);
      return kPass;
    }

    int code = kPass;
    const ReportEnvelope e = inv->parsed() ? invariants_envelope(config, &code) : verify_envelope(config, &code);
    emit(config, e.command + "_" + tag, render(e, config.format), out, err);
    return code;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fibercone::cli
