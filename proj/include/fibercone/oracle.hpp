#ifndef FIBERCONE_ORACLE_HPP_
#define FIBERCONE_ORACLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibercone/invariants.hpp"
#include "fibercone/scroll_model.hpp"

// Brute-force Hilbert function of the fiber cone: the dimension of the span of
// all degree-t products of the 2x2 minors, by exact rank computation. It never
// looks at the initial complex.
namespace fibercone::oracle {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

// Arithmetic modulo a prime p < 2^32.
class PrimeField {
 public:
  using Value = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }
  Value from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<Value>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Value add(Value x, Value y) const { return (x + y) % p_; }
  Value sub(Value x, Value y) const { return (x + p_ - y) % p_; }
  Value mul(Value x, Value y) const { return (x * y) % p_; }
  Value neg(Value x) const { return x == 0 ? 0 : p_ - x; }
  Value inv(Value x) const;
  bool is_zero(Value x) const { return x == 0; }

 private:
  std::uint64_t p_;
};

// Exact arithmetic over the rationals.
class RationalField {
 public:
  using Value = boost::multiprecision::cpp_rational;

  Value from_int(long long x) const { return Value(x); }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value mul(const Value& x, const Value& y) const { return x * y; }
  Value neg(const Value& x) const { return -x; }
  Value inv(const Value& x) const { return 1 / x; }
  bool is_zero(const Value& x) const { return x == 0; }
};

bool is_prime(std::uint64_t n);

// Monomial in the x variables, stored as the sorted multiset of variable
// indices packed six bits apiece (largest index in the top slot). The packing
// is canonical, so integer comparison is a fixed total order.
class Monomial {
 public:
  static constexpr int kMaxDegree = 10;
  static constexpr int kMaxVariable = 62;

  Monomial() = default;
  static Monomial from_variables(std::vector<int> variables);

  std::vector<int> variables() const;  // ascending
  int degree() const;
  Monomial operator*(const Monomial& other) const;

  std::uint64_t code() const { return code_; }
  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t code_ = 0;
};

// Maps x_{i,j} to a dense variable index: blocks in order, j = 0..n_i.
class VariableIndex {
 public:
  explicit VariableIndex(const ScrollSpec& spec);
  int index(const EntryName& e) const { return offset_.at(e.block - 1) + e.index; }
  EntryName entry(int index) const;
  int size() const { return size_; }

 private:
  std::vector<int> offset_;
  int size_ = 0;
};

template <class Field>
struct ExpandedPolynomial {
  std::map<Monomial, typename Field::Value> terms;

  bool empty() const { return terms.empty(); }
  // Same total degree across terms; no stored zeros.
  bool homogeneous() const;
};

template <class Field>
ExpandedPolynomial<Field> expand_minor(const Field& field, const VariableIndex& vars, const MinorPolynomial& m);

template <class Field>
ExpandedPolynomial<Field> multiply(const Field& field, const ExpandedPolynomial<Field>& x,
                                   const ExpandedPolynomial<Field>& y);

// Rank of a sparse matrix whose rows are polynomials (columns = monomials).
template <class Field>
std::size_t sparse_rank(const Field& field, const std::vector<ExpandedPolynomial<Field>>& rows);

enum class Arithmetic { kPrime, kRational };

struct OracleOptions {
  Arithmetic arithmetic = Arithmetic::kPrime;
  std::uint64_t prime = kDefaultPrime;
  // Largest admissible number of degree-t products.
  std::size_t capacity = 100000;
};

// C(N + t - 1, t) with N = C(c, 2): rows of the degree-t rank problem.
std::size_t product_count(const ScrollSpec& spec, int t);

// dim_K of the degree-t piece of K[I]. Throws CapacityError past the limit.
Count fiber_hilbert_function(const ScrollSpec& spec, int t, const OracleOptions& options = {});

// Runs the modular computation and, if requested, the rational one. A
// disagreement means the prime divides some pivot of the rational elimination
// and is flagged.
struct HilbertProbe {
  Count modular = 0;
  std::optional<Count> rational;
  bool flagged = false;
};

HilbertProbe probe_fiber_hilbert(const ScrollSpec& spec, int t, std::uint64_t prime, bool confirm_rational,
                                 std::size_t capacity = 100000);

struct CrossCheckRow {
  int t = 0;
  Count fiber = 0;
  Count faces = 0;
  bool equal() const { return fiber == faces; }
};

struct CrossCheckTable {
  std::vector<CrossCheckRow> rows;
  bool pass = true;
};

// Compares the fiber cone Hilbert function with the Stanley-Reisner Hilbert
// function of the initial complex for t = 0..t_max. Requires c >= d + 4.
CrossCheckTable cross_check(const ScrollSpec& spec, int t_max, const OracleOptions& options = {});
CrossCheckTable cross_check(const ScrollSpec& spec, std::span<const Facet> facets, int t_max,
                            const OracleOptions& options = {});

// Degree-t table of the oracle alone, t = 0..t_max.
std::vector<Count> fiber_hilbert_table(const ScrollSpec& spec, int t_max, const OracleOptions& options = {});

}  // namespace fibercone::oracle

#endif  // FIBERCONE_ORACLE_HPP_
