#ifndef FIBERCONE_CLI_HPP_
#define FIBERCONE_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibercone/dual_quotients.hpp"
#include "fibercone/report.hpp"

namespace fibercone::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kMismatch = 1,
  kUsage = 2,  // bad arguments, unsupported regime, capacity
  kPredictionOnly = 3,
};

enum class Format { kJson, kCsv, kText };

Format parse_format(const std::string& name);

struct RunConfig {
  std::vector<int> n;
  int t_max = 3;
  std::string modulus = "2147483647";  // or "rational"
  Format format = Format::kText;
  std::size_t capacity = 100000;
  int hilbert_window = 5;
  RuleMutation mutation = RuleMutation::kNone;
  bool timings = false;
  std::optional<std::string> output_dir;
};

// "2,2,4,4" -> {2,2,4,4}. Throws PreconditionError on anything else.
std::vector<int> parse_degrees(const std::string& text);

// Builds the envelope for `invariants`; `exit_code` receives the code the
// command would return.
ReportEnvelope invariants_envelope(const RunConfig& config, int* exit_code = nullptr);
ReportEnvelope verify_envelope(const RunConfig& config, int* exit_code = nullptr);

std::string render(const ReportEnvelope& e, Format format);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibercone::cli

#endif  // FIBERCONE_CLI_HPP_
