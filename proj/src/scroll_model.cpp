#include "fibercone/scroll_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

ScrollSpec::ScrollSpec(std::vector<int> degrees) : n_(std::move(degrees)) {
  if (n_.empty()) throw PreconditionError("scroll type must have at least one block");
  for (int ni : n_)
    if (ni < 1) throw PreconditionError("block degrees must be positive");
  if (!std::is_sorted(n_.begin(), n_.end()))
    throw PreconditionError("block degrees must be non-decreasing");
  c_ = std::accumulate(n_.begin(), n_.end(), 0);
  if (c_ > kMaxColumns)
    throw PreconditionError("c = " + std::to_string(c_) + " exceeds the supported maximum " +
                            std::to_string(kMaxColumns));
}

ScrollSpec ScrollSpec::normalized(std::vector<int> degrees, bool* reordered) {
  const bool sorted = std::is_sorted(degrees.begin(), degrees.end());
  if (reordered) *reordered = !sorted;
  std::sort(degrees.begin(), degrees.end());
  return ScrollSpec(std::move(degrees));
}

std::ostream& operator<<(std::ostream& os, const ScrollSpec& spec) {
  os << '(';
  for (int i = 1; i <= spec.d(); ++i) os << (i > 1 ? "," : "") << spec.degree(i);
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const EntryName& e) {
  return os << 'x' << e.block << '_' << e.index;
}

ScrollMatrix build_matrix(const ScrollSpec& spec) {
  std::vector<MatrixColumn> cols;
  cols.reserve(spec.c());
  const int longest = *std::max_element(spec.degrees().begin(), spec.degrees().end());
  // Block i has non-last columns 0..n_i-2.
  for (int p = 0; p + 1 < longest; ++p)
    for (int i = 1; i <= spec.d(); ++i)
      if (p <= spec.degree(i) - 2) cols.push_back({{i, p}, {i, p + 1}});
  for (int i = spec.d(); i >= 1; --i) {
    const int last = spec.degree(i) - 1;
    cols.push_back({{i, last}, {i, last + 1}});
  }
  return ScrollMatrix(std::move(cols));
}

LeavesProfile leaves_profile(const ScrollSpec& spec, int alpha) {
  return leaves_profile(spec, build_matrix(spec), alpha);
}

LeavesProfile leaves_profile(const ScrollSpec& spec, const ScrollMatrix& matrix, int alpha) {
  const int c = spec.c();
  const int d = spec.d();
  if (!spec.has_tree_regime())
    throw PreconditionError("leaves sets need c >= d + 4");
  if (alpha < 1 || alpha > c - d - 2)
    throw PreconditionError("alpha must lie in [1, c - d - 2]");

  LeavesProfile out;
  out.alpha = alpha;
  out.gamma.assign(d, 0);
  for (int i = 1; i <= d; ++i) {
    for (int k = alpha + 2; k <= c; ++k) {
      if (matrix.column(k).block() == i) {
        out.gamma[i - 1] = k;
        break;
      }
    }
    if (out.gamma[i - 1] == 0) throw InternalError("block has no column after alpha + 2");
  }

  const std::set<int> gammas(out.gamma.begin(), out.gamma.end());
  for (int ell = 2; ell <= d + 1; ++ell) {
    std::set<int> expected;
    for (int k = alpha + 2; k <= alpha + ell; ++k) expected.insert(k);
    for (int k = c - d + ell; k <= c; ++k) expected.insert(k);
    if (expected == gammas) {
      out.ell = ell;
      break;
    }
  }
  if (out.ell == 0) {
    std::ostringstream msg;
    msg << "no ell in [2, d+1] decomposes the gamma set of " << spec << " at alpha " << alpha;
    throw InternalError(msg.str());
  }

  for (int beta = alpha; beta <= alpha + out.ell; ++beta) out.leaves.push_back({beta, beta + 1});
  for (int beta = c - d + out.ell - 1; beta <= c - 1; ++beta) out.leaves.push_back({beta, beta + 1});
  std::sort(out.leaves.begin(), out.leaves.end());
  if (std::adjacent_find(out.leaves.begin(), out.leaves.end()) != out.leaves.end() ||
      static_cast<int>(out.leaves.size()) != d + 2)
    throw InternalError("leaves set does not have d + 2 distinct intervals");
  return out;
}

std::ostream& operator<<(std::ostream& os, const MinorPolynomial& p) {
  if (p.terms.empty()) return os << '0';
  bool first = true;
  for (const auto& t : p.terms) {
    os << (t.coefficient < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (std::abs(t.coefficient) != 1) os << std::abs(t.coefficient) << '*';
    bool first_factor = true;
    for (const auto& [e, k] : t.exponents) {
      if (!first_factor) os << '*';
      os << e;
      if (k > 1) os << '^' << k;
      first_factor = false;
    }
    first = false;
  }
  return os;
}

MinorPolynomial minor(const ScrollSpec& spec, int a, int b) {
  return minor(build_matrix(spec), a, b);
}

MinorPolynomial minor(const ScrollMatrix& matrix, int a, int b) {
  if (a < 1 || b > matrix.size() || a >= b)
    throw InvalidVertexError("minor columns must satisfy 1 <= a < b <= c");
  const auto& ca = matrix.column(a);
  const auto& cb = matrix.column(b);

  std::map<std::map<EntryName, int>, int> combined;
  auto add = [&](const EntryName& x, const EntryName& y, int sign) {
    std::map<EntryName, int> mono;
    ++mono[x];
    ++mono[y];
    combined[mono] += sign;
  };
  add(ca.top, cb.bottom, +1);
  add(cb.top, ca.bottom, -1);

  MinorPolynomial out;
  for (auto& [mono, coeff] : combined)
    if (coeff != 0) out.terms.push_back({coeff, mono});
  // Leading term first: the one coming from top(a) * bottom(b).
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const MinorTerm& x, const MinorTerm& y) { return x.coefficient > y.coefficient; });
  if (out.terms.empty()) throw InternalError("2x2 minor cancelled to zero");
  return out;
}

}  // namespace fibercone
