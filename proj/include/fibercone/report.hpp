#ifndef FIBERCONE_REPORT_HPP_
#define FIBERCONE_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibercone/invariants.hpp"

namespace fibercone {

inline constexpr int kReportSchemaVersion = 1;

struct FacetFailure {
  int alpha = 0;
  std::vector<Vertex> facet;
  std::vector<std::vector<Vertex>> computed_generators;
  std::vector<Vertex> predicted_lg;
  // Non-singleton minimal generators, and singletons on only one side of the
  // computed/predicted comparison.
  std::vector<std::vector<Vertex>> offending;

  bool operator==(const FacetFailure&) const = default;
};

FacetFailure describe_failure(const ColonReport& report);

struct VerificationSummary {
  bool ran = false;
  bool linear_quotients = false;
  Count facets_checked = 0;
  std::string mutation = "none";
  std::vector<FacetFailure> failures;

  bool operator==(const VerificationSummary&) const = default;
};

struct HilbertWindow {
  std::vector<Count> by_faces;
  std::vector<Count> by_h_polynomial;
  bool agree = false;

  bool operator==(const HilbertWindow&) const = default;
};

struct OracleRow {
  int t = 0;
  Count fiber = 0;
  Count faces = 0;
  bool operator==(const OracleRow&) const = default;
};

struct OracleSummary {
  bool ran = false;
  std::string arithmetic;  // decimal prime or "rational"
  std::vector<OracleRow> rows;
  bool pass = false;

  bool operator==(const OracleSummary&) const = default;
};

// Everything one command run reports about one scroll. `status` is one of
// "pass", "mismatch" or "prediction-only".
struct ReportEnvelope {
  int schema_version = kReportSchemaVersion;
  std::string tool_version;
  std::string command;
  std::vector<int> n;
  bool normalized = false;
  std::string status;
  InvariantReport invariants;
  InvariantReport predicted;
  std::optional<HilbertWindow> hilbert;
  VerificationSummary verification;
  OracleSummary oracle;
  std::optional<std::map<std::string, double>> timings_ms;

  bool operator==(const ReportEnvelope&) const = default;
};

void to_json(nlohmann::json& j, const Vertex& v);
void from_json(const nlohmann::json& j, Vertex& v);
void to_json(nlohmann::json& j, const InvariantReport& r);
void from_json(const nlohmann::json& j, InvariantReport& r);
void to_json(nlohmann::json& j, const ReportEnvelope& e);
void from_json(const nlohmann::json& j, ReportEnvelope& e);

std::string to_json_string(const ReportEnvelope& e, int indent = 2);
ReportEnvelope parse_envelope(const std::string& text);

// Summary columns shared by single reports and batch runs.
inline constexpr const char* kCsvHeader = "c,d,facets,reg,a,gorenstein,pass";
std::string to_csv_row(const ReportEnvelope& e);
std::string to_text(const ReportEnvelope& e);

}  // namespace fibercone

#endif  // FIBERCONE_REPORT_HPP_
