#ifndef FIBERCONE_VERTEX_HPP_
#define FIBERCONE_VERTEX_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace fibercone {

// An open interval (a, b) with integral endpoints 1 <= a < b <= c. It names the
// variable T_{a,b} of the fiber cone presentation and a vertex of the initial
// complex.
struct Vertex {
  int a = 0;
  int b = 0;

  int length() const { return b - a; }
  bool is_unit() const { return b - a == 1; }
  // Containment of open intervals, not necessarily strict.
  bool within(const Vertex& other) const { return other.a <= a && b <= other.b; }
  bool disjoint_from(const Vertex& other) const { return b <= other.a || other.b <= a; }
  bool crosses(const Vertex& other) const {
    return !disjoint_from(other) && !within(other) && !other.within(*this);
  }

  // Lexicographic on (a, b). Note that this is the *reverse* of the variable
  // order: the smaller pair is the larger variable (see variable_greater).
  auto operator<=>(const Vertex&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

// T_u > T_v iff the leftmost nonzero entry of u - v is negative.
inline bool variable_greater(const Vertex& u, const Vertex& v) { return u < v; }

// Largest supported column count. C(22, 2) = 231 vertices fit in 256 bits.
inline constexpr int kMaxColumns = 22;
inline constexpr int kVertexWords = 4;

// Number of vertices for c columns.
constexpr int vertex_count(int c) { return c * (c - 1) / 2; }

// Bit position of (a, b) among the C(c, 2) vertices. Positions follow the
// variable order from the top: (1,2) -> 0, (1,3) -> 1, ..., (c-1,c) -> last.
constexpr int vertex_position(int c, Vertex v) {
  return (v.a - 1) * c - (v.a - 1) * v.a / 2 + (v.b - v.a - 1);
}

Vertex vertex_at(int c, int position);

// Squarefree set of vertices of one scroll, stored as a bitmask indexed by
// vertex_position. All set operations require both operands to use the same c.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int c) : c_(c) {}
  VertexSet(int c, const std::vector<Vertex>& vertices);

  int columns() const { return c_; }

  void insert(Vertex v) { set_bit(vertex_position(c_, v)); }
  void erase(Vertex v) { clear_bit(vertex_position(c_, v)); }
  bool contains(Vertex v) const { return test_bit(vertex_position(c_, v)); }

  void set_bit(int p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void clear_bit(int p) { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  bool test_bit(int p) const { return (words_[p >> 6] >> (p & 63)) & 1U; }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  // Position of the lowest set bit (the largest variable), or -1.
  int first_position() const {
    for (int i = 0; i < kVertexWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kVertexWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kVertexWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet operator|(const VertexSet& o) const { return combine(o, [](auto x, auto y) { return x | y; }); }
  VertexSet operator&(const VertexSet& o) const { return combine(o, [](auto x, auto y) { return x & y; }); }
  VertexSet operator^(const VertexSet& o) const { return combine(o, [](auto x, auto y) { return x ^ y; }); }
  // Set difference.
  VertexSet operator-(const VertexSet& o) const { return combine(o, [](auto x, auto y) { return x & ~y; }); }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }

  // All vertices V \ *this.
  VertexSet complement() const;

  // Vertices sorted by decreasing variable order, i.e. increasing (a, b).
  std::vector<Vertex> vertices() const;

  const std::array<std::uint64_t, kVertexWords>& words() const { return words_; }

  bool operator==(const VertexSet& o) const = default;
  // Plain bitmask order, only meant for deterministic containers.
  bool operator<(const VertexSet& o) const {
    for (int i = 0; i < kVertexWords; ++i)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

 private:
  template <class Op>
  VertexSet combine(const VertexSet& o, Op op) const {
    VertexSet r(c_);
    for (int i = 0; i < kVertexWords; ++i) r.words_[i] = op(words_[i], o.words_[i]);
    return r;
  }

  int c_ = 0;
  std::array<std::uint64_t, kVertexWords> words_{};
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t h = 0;
    for (auto w : s.words()) h = h * 0x9e3779b97f4a7c15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }
};

}  // namespace fibercone

#endif  // FIBERCONE_VERTEX_HPP_
