#ifndef FIBERCONE_INVARIANTS_HPP_
#define FIBERCONE_INVARIANTS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fibercone/dual_quotients.hpp"
#include "fibercone/facet_complex.hpp"

namespace fibercone {

using Count = std::int64_t;

// h_0, ..., h_s with trailing zeros trimmed.
struct HVector {
  std::vector<Count> h;

  int degree() const { return static_cast<int>(h.size()) - 1; }
  Count sum() const;
  bool palindromic() const;
  bool operator==(const HVector&) const = default;
};

// h_k = number of facets whose colon ideal has k linear generators. Throws
// DomainError if any report is not linear.
HVector h_vector_from_quotients(std::span<const ColonReport> reports);

// Binomial coefficient, zero outside 0 <= k <= n.
Count binomial(Count n, Count k);

// Number of faces with k vertices for k = 0..max_vertices, found by walking
// faces in increasing vertex order while narrowing the list of facets that
// contain them. `work_limit` bounds the total number of (face, facet) pairs
// visited; CapacityError if exceeded.
std::vector<Count> face_counts(std::span<const Facet> facets, int max_vertices,
                               Count work_limit = 2'000'000'000);

// Stanley-Reisner Hilbert function in degree t from the face counts.
Count hilbert_from_faces(std::span<const Count> f, int t);

// Coefficient of u^t in h(u) / (1 - u)^dim.
Count hilbert_from_h(const HVector& h, int dim, int t);

Count hilbert_function_by_faces(std::span<const Facet> facets, int t);

struct HilbertData {
  int dim = 0;
  HVector h_polynomial;
  std::map<int, Count> hf;          // by faces
  std::map<int, Count> hf_from_h;   // by the h-polynomial expansion
  bool paths_agree() const { return hf == hf_from_h; }
};

struct InvariantReport {
  int c = 0;
  int d = 0;
  bool prediction_only = false;
  std::optional<Count> facet_count;
  std::optional<HVector> h_vector;
  int dim = 0;
  int reg = 0;
  int a_invariant = 0;
  int reduction_number = 0;
  bool gorenstein = false;
  bool closed_form_match = true;

  bool operator==(const InvariantReport&) const = default;
};

// Closed-form predictions. Requires c >= 2 and d >= 1 (PreconditionError).
InvariantReport closed_form(int c, int d);

struct AnalysisOptions {
  int hilbert_window = 5;
  QuotientOptions quotients;
};

// Everything the computed path produces for one scroll with c >= d + 4.
struct Analysis {
  FacetEnumeration facets;
  LinearQuotientsResult quotients;
  HilbertData hilbert;
  InvariantReport report;

  bool pass() const { return quotients.pass && hilbert.paths_agree() && report.closed_form_match; }
};

// Runs the whole pipeline. When linear quotients fail no h-vector exists;
// the report then only carries the closed-form values with
// closed_form_match = false.
Analysis analyze(const ScrollSpec& spec, const AnalysisOptions& options = {});

// Computed report for c >= d + 4, closed-form prediction (prediction_only)
// otherwise.
InvariantReport full_report(const ScrollSpec& spec, const AnalysisOptions& options = {});

}  // namespace fibercone

#endif  // FIBERCONE_INVARIANTS_HPP_
