#include "fibercone/oracle.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone::oracle {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw PreconditionError("modulus must be a prime below 2^32");
}

PrimeField::Value PrimeField::inv(Value x) const {
  if (x == 0) throw InternalError("inverse of zero");
  Value result = 1;
  Value base = x;
  for (std::uint64_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Monomial Monomial::from_variables(std::vector<int> variables) {
  if (static_cast<int>(variables.size()) > kMaxDegree) throw CapacityError("monomial degree exceeds the packing");
  std::sort(variables.begin(), variables.end(), std::greater<>());
  Monomial m;
  int slot = 0;
  for (int v : variables) {
    if (v < 0 || v > kMaxVariable) throw CapacityError("too many variables for the monomial packing");
    m.code_ |= static_cast<std::uint64_t>(v + 1) << (6 * (kMaxDegree - 1 - slot));
    ++slot;
  }
  return m;
}

std::vector<int> Monomial::variables() const {
  std::vector<int> out;
  for (int slot = 0; slot < kMaxDegree; ++slot) {
    const auto v = (code_ >> (6 * (kMaxDegree - 1 - slot))) & 63U;
    if (v == 0) break;
    out.push_back(static_cast<int>(v) - 1);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int Monomial::degree() const { return static_cast<int>(variables().size()); }

Monomial Monomial::operator*(const Monomial& other) const {
  auto v = variables();
  auto w = other.variables();
  v.insert(v.end(), w.begin(), w.end());
  return from_variables(std::move(v));
}

VariableIndex::VariableIndex(const ScrollSpec& spec) {
  for (int i = 1; i <= spec.d(); ++i) {
    offset_.push_back(size_);
    size_ += spec.degree(i) + 1;
  }
}

EntryName VariableIndex::entry(int index) const {
  int block = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), index) - offset_.begin());
  return {block, index - offset_[block - 1]};
}

template <class Field>
bool ExpandedPolynomial<Field>::homogeneous() const {
  if (terms.empty()) return true;
  const int deg = terms.begin()->first.degree();
  return std::all_of(terms.begin(), terms.end(), [&](const auto& kv) {
    return kv.first.degree() == deg && !Field{}.is_zero(kv.second);
  });
}

template <class Field>
ExpandedPolynomial<Field> expand_minor(const Field& field, const VariableIndex& vars, const MinorPolynomial& m) {
  ExpandedPolynomial<Field> out;
  for (const auto& term : m.terms) {
    std::vector<int> vs;
    for (const auto& [e, k] : term.exponents)
      for (int i = 0; i < k; ++i) vs.push_back(vars.index(e));
    out.terms.emplace(Monomial::from_variables(vs), field.from_int(term.coefficient));
  }
  return out;
}

template <class Field>
ExpandedPolynomial<Field> multiply(const Field& field, const ExpandedPolynomial<Field>& x,
                                   const ExpandedPolynomial<Field>& y) {
  ExpandedPolynomial<Field> out;
  for (const auto& [mx, cx] : x.terms) {
    for (const auto& [my, cy] : y.terms) {
      const auto prod = field.mul(cx, cy);
      auto [it, fresh] = out.terms.emplace(mx * my, prod);
      if (!fresh) it->second = field.add(it->second, prod);
    }
  }
  std::erase_if(out.terms, [&](const auto& kv) { return field.is_zero(kv.second); });
  return out;
}

namespace {

template <class Field>
using SparseRow = std::vector<std::pair<std::uint32_t, typename Field::Value>>;

// row -= factor * pivot, both sorted by column.
template <class Field>
SparseRow<Field> axpy(const Field& field, const SparseRow<Field>& row, const typename Field::Value& factor,
                      const SparseRow<Field>& pivot) {
  SparseRow<Field> out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, field.neg(field.mul(factor, j->second)));
      ++j;
    } else {
      auto v = field.sub(i->second, field.mul(factor, j->second));
      if (!field.is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class Field>
std::size_t sparse_rank(const Field& field, const std::vector<ExpandedPolynomial<Field>>& rows) {
  std::vector<Monomial> columns;
  for (const auto& r : rows)
    for (const auto& kv : r.terms) columns.push_back(kv.first);
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  auto column_of = [&](const Monomial& m) {
    return static_cast<std::uint32_t>(std::lower_bound(columns.begin(), columns.end(), m) - columns.begin());
  };

  std::vector<int> pivot_of(columns.size(), -1);
  std::vector<SparseRow<Field>> pivots;
  for (const auto& poly : rows) {
    SparseRow<Field> row;
    row.reserve(poly.terms.size());
    for (const auto& [m, v] : poly.terms) row.emplace_back(column_of(m), v);
    while (!row.empty()) {
      const auto lead = row.front().first;
      const int p = pivot_of[lead];
      if (p < 0) {
        const auto scale = field.inv(row.front().second);
        for (auto& e : row) e.second = field.mul(e.second, scale);
        pivot_of[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = axpy(field, row, row.front().second, pivots[p]);
    }
  }
  return pivots.size();
}

std::size_t product_count(const ScrollSpec& spec, int t) {
  const auto n = static_cast<Count>(vertex_count(spec.c()));
  // C(n + t - 1, t) saturating well past any capacity.
  long double r = 1;
  for (int i = 1; i <= t; ++i) r = r * static_cast<long double>(n + t - i) / i;
  return r > 1e18L ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(r + 0.5L);
}

namespace {

template <class Field>
Count rank_of_products(const Field& field, const ScrollSpec& spec, int t, std::size_t capacity) {
  if (t < 0) throw PreconditionError("degree must be non-negative");
  const std::size_t count = product_count(spec, t);
  if (count > capacity)
    throw CapacityError("degree-" + std::to_string(t) + " oracle needs " + std::to_string(count) +
                        " products, over the capacity of " + std::to_string(capacity) +
                        "; raise --capacity or lower --t-max");
  if (2 * t > Monomial::kMaxDegree) throw CapacityError("oracle supports degrees up to 5");

  const ScrollMatrix matrix = build_matrix(spec);
  const VariableIndex vars(spec);
  const int c = spec.c();
  std::vector<ExpandedPolynomial<Field>> minors;
  for (int a = 1; a <= c; ++a)
    for (int b = a + 1; b <= c; ++b) minors.push_back(expand_minor(field, vars, minor(matrix, a, b)));
  const int n = static_cast<int>(minors.size());

  ExpandedPolynomial<Field> one;
  one.terms.emplace(Monomial{}, field.from_int(1));

  std::vector<ExpandedPolynomial<Field>> rows;
  rows.reserve(count);
  if (t == 0) {
    rows.push_back(one);
  } else if (n > 0) {
    // Non-decreasing index tuples; prefix[k] holds the product of the first k
    // factors so advancing position k only recomputes from there.
    std::vector<int> idx(t, 0);
    std::vector<ExpandedPolynomial<Field>> prefix(t + 1);
    prefix[0] = one;
    int from = 0;
    while (true) {
      for (int k = from; k < t; ++k) prefix[k + 1] = multiply(field, prefix[k], minors[idx[k]]);
      rows.push_back(prefix[t]);
      int k = t - 1;
      while (k >= 0 && idx[k] == n - 1) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < t; ++j) idx[j] = idx[k];
      from = k;
    }
  }
  return static_cast<Count>(sparse_rank(field, rows));
}

}  // namespace

Count fiber_hilbert_function(const ScrollSpec& spec, int t, const OracleOptions& options) {
  if (options.arithmetic == Arithmetic::kRational)
    return rank_of_products(RationalField{}, spec, t, options.capacity);
  return rank_of_products(PrimeField(options.prime), spec, t, options.capacity);
}

HilbertProbe probe_fiber_hilbert(const ScrollSpec& spec, int t, std::uint64_t prime, bool confirm_rational,
                                 std::size_t capacity) {
  HilbertProbe out;
  out.modular = rank_of_products(PrimeField(prime), spec, t, capacity);
  if (confirm_rational) {
    out.rational = rank_of_products(RationalField{}, spec, t, capacity);
    out.flagged = *out.rational != out.modular;
  }
  return out;
}

std::vector<Count> fiber_hilbert_table(const ScrollSpec& spec, int t_max, const OracleOptions& options) {
  std::vector<Count> out;
  for (int t = 0; t <= t_max; ++t) out.push_back(fiber_hilbert_function(spec, t, options));
  return out;
}

CrossCheckTable cross_check(const ScrollSpec& spec, int t_max, const OracleOptions& options) {
  const auto facets = enumerate_facets(spec);
  return cross_check(spec, facets.facets, t_max, options);
}

CrossCheckTable cross_check(const ScrollSpec& spec, std::span<const Facet> facets, int t_max,
                            const OracleOptions& options) {
  if (!spec.has_tree_regime()) throw UnsupportedRegimeError("cross check needs c >= d + 4");
  if (t_max < 0) throw PreconditionError("t_max must be non-negative");
  const auto f = face_counts(facets, t_max);
  CrossCheckTable out;
  for (int t = 0; t <= t_max; ++t) {
    CrossCheckRow row{t, fiber_hilbert_function(spec, t, options), hilbert_from_faces(f, t)};
    out.pass = out.pass && row.equal();
    out.rows.push_back(row);
  }
  return out;
}

template struct ExpandedPolynomial<PrimeField>;
template struct ExpandedPolynomial<RationalField>;
template ExpandedPolynomial<PrimeField> expand_minor(const PrimeField&, const VariableIndex&, const MinorPolynomial&);
template ExpandedPolynomial<RationalField> expand_minor(const RationalField&, const VariableIndex&,
                                                        const MinorPolynomial&);
template ExpandedPolynomial<PrimeField> multiply(const PrimeField&, const ExpandedPolynomial<PrimeField>&,
                                                 const ExpandedPolynomial<PrimeField>&);
template ExpandedPolynomial<RationalField> multiply(const RationalField&, const ExpandedPolynomial<RationalField>&,
                                                    const ExpandedPolynomial<RationalField>&);
template std::size_t sparse_rank(const PrimeField&, const std::vector<ExpandedPolynomial<PrimeField>>&);
template std::size_t sparse_rank(const RationalField&, const std::vector<ExpandedPolynomial<RationalField>>&);

}  // namespace fibercone::oracle
