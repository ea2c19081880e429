#include "fibercone/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

Count HVector::sum() const { return std::accumulate(h.begin(), h.end(), Count{0}); }

bool HVector::palindromic() const { return std::equal(h.begin(), h.end(), h.rbegin()); }

HVector h_vector_from_quotients(std::span<const ColonReport> reports) {
  HVector out;
  for (const auto& r : reports) {
    if (!r.linear) throw DomainError("h-vector needs linear quotients for every facet");
    const auto k = static_cast<std::size_t>(r.quotient_degree());
    if (out.h.size() <= k) out.h.resize(k + 1, 0);
    ++out.h[k];
  }
  while (!out.h.empty() && out.h.back() == 0) out.h.pop_back();
  return out;
}

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

class FaceWalker {
 public:
  FaceWalker(std::span<const Facet> facets, int max_vertices, Count work_limit)
      : facets_(facets), max_vertices_(max_vertices), work_limit_(work_limit),
        counts_(max_vertices + 1, 0) {
    const int c = facets.empty() ? 0 : facets.front().context().c();
    positions_ = vertex_count(c);
    buckets_.assign(max_vertices + 1, std::vector<std::vector<std::uint32_t>>(positions_));
  }

  std::vector<Count> run() {
    counts_[0] = 1;
    if (max_vertices_ == 0 || facets_.empty()) return counts_;
    std::vector<std::uint32_t> all(facets_.size());
    std::iota(all.begin(), all.end(), 0U);
    descend(all, -1, 1);
    return counts_;
  }

 private:
  // `holders` are the facets containing the current face, whose largest
  // vertex position is `last`. Extends it by one vertex at depth `depth`.
  void descend(const std::vector<std::uint32_t>& holders, int last, int depth) {
    auto& buckets = buckets_[depth];
    for (auto& b : buckets) b.clear();
    for (auto idx : holders) {
      const auto& words = facets_[idx].vertices().words();
      for (int w = 0; w < kVertexWords; ++w) {
        std::uint64_t bits = words[w];
        const int lo = last + 1 - w * 64;
        if (lo >= 64) continue;
        if (lo > 0) bits &= ~std::uint64_t{0} << lo;
        while (bits) {
          buckets[w * 64 + std::countr_zero(bits)].push_back(idx);
          bits &= bits - 1;
          if (++work_ > work_limit_)
            throw CapacityError("face enumeration exceeded its work limit; lower the Hilbert window");
        }
      }
    }
    for (int p = last + 1; p < positions_; ++p) {
      if (buckets[p].empty()) continue;
      ++counts_[depth];
      if (depth < max_vertices_) {
        // Deeper levels reuse their own bucket arrays, so this one stays valid.
        descend(buckets[p], p, depth + 1);
      }
    }
  }

  std::span<const Facet> facets_;
  int max_vertices_;
  Count work_limit_;
  Count work_ = 0;
  int positions_ = 0;
  std::vector<Count> counts_;
  std::vector<std::vector<std::vector<std::uint32_t>>> buckets_;
};

}  // namespace

std::vector<Count> face_counts(std::span<const Facet> facets, int max_vertices, Count work_limit) {
  if (max_vertices < 0) throw PreconditionError("max_vertices must be non-negative");
  return FaceWalker(facets, max_vertices, work_limit).run();
}

Count hilbert_from_faces(std::span<const Count> f, int t) {
  if (t < 0) throw PreconditionError("degree must be non-negative");
  if (t == 0) return 1;
  if (static_cast<int>(f.size()) <= t) throw PreconditionError("face counts do not reach degree t");
  // A monomial of degree t with support a face of k vertices: C(t-1, k-1) ways.
  Count total = 0;
  for (int k = 1; k <= t; ++k) total += f[k] * binomial(t - 1, k - 1);
  return total;
}

Count hilbert_from_h(const HVector& h, int dim, int t) {
  Count total = 0;
  for (int k = 0; k <= h.degree() && k <= t; ++k) total += h.h[k] * binomial(t - k + dim - 1, dim - 1);
  return total;
}

Count hilbert_function_by_faces(std::span<const Facet> facets, int t) {
  const auto f = face_counts(facets, t);
  return hilbert_from_faces(f, t);
}

InvariantReport closed_form(int c, int d) {
  if (c < 2 || d < 1) throw PreconditionError("closed forms need c >= 2 and d >= 1");
  InvariantReport r;
  r.c = c;
  r.d = d;
  r.prediction_only = true;
  if (c >= d + 4) {
    r.reg = (c + d) / 2;  // ceil((c + d - 1) / 2)
    r.dim = c + d;
  } else if (c > 2) {
    r.reg = c - 3;
    r.dim = 2 * c - 3;
  } else {
    // One minor: the fiber cone is a polynomial ring in one variable.
    r.reg = 0;
    r.dim = 1;
  }
  r.a_invariant = r.reg - r.dim;
  r.reduction_number = r.reg;
  r.gorenstein = c == 2 || c == 3 || c == 2 + d || c == 3 + d || c == 4 + d;
  return r;
}

Analysis analyze(const ScrollSpec& spec, const AnalysisOptions& options) {
  if (options.hilbert_window < 0) throw PreconditionError("Hilbert window must be non-negative");
  Analysis out{enumerate_facets(spec), {}, {}, {}};
  out.quotients = verify_linear_quotients(out.facets, options.quotients);

  const InvariantReport predicted = closed_form(spec.c(), spec.d());
  auto& r = out.report;
  r = predicted;
  r.prediction_only = false;
  r.facet_count = static_cast<Count>(out.facets.facets.size());
  if (!out.quotients.pass) {
    r.closed_form_match = false;
    return out;
  }

  int dim = spec.c() + spec.d();
  for (const auto& f : out.facets.facets)
    if (f.size() != dim) throw InternalError("facets of unequal size");

  HVector h = h_vector_from_quotients(out.quotients.reports);
  r.h_vector = h;
  r.dim = dim;
  r.reg = h.degree();
  r.a_invariant = r.reg - r.dim;
  r.reduction_number = r.reg;
  r.gorenstein = h.palindromic();
  r.closed_form_match = r.dim == predicted.dim && r.reg == predicted.reg &&
                        r.a_invariant == predicted.a_invariant &&
                        r.reduction_number == predicted.reduction_number && r.gorenstein == predicted.gorenstein;

  auto& hd = out.hilbert;
  hd.dim = dim;
  hd.h_polynomial = h;
  const auto f = face_counts(out.facets.facets, options.hilbert_window);
  for (int t = 0; t <= options.hilbert_window; ++t) {
    hd.hf[t] = hilbert_from_faces(f, t);
    hd.hf_from_h[t] = hilbert_from_h(h, dim, t);
  }
  return out;
}

InvariantReport full_report(const ScrollSpec& spec, const AnalysisOptions& options) {
  if (!spec.has_tree_regime()) return closed_form(spec.c(), spec.d());
  auto a = analyze(spec, options);
  if (!a.hilbert.paths_agree()) a.report.closed_form_match = false;
  return a.report;
}

}  // namespace fibercone
