#include "fibercone/vertex.hpp"

namespace fibercone {

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.a << ',' << v.b << ')';
}

Vertex vertex_at(int c, int position) {
  int a = 1;
  while (position >= c - a) {
    position -= c - a;
    ++a;
  }
  return {a, a + 1 + position};
}

VertexSet::VertexSet(int c, const std::vector<Vertex>& vertices) : c_(c) {
  for (const auto& v : vertices) insert(v);
}

VertexSet VertexSet::complement() const {
  VertexSet all(c_);
  const int n = vertex_count(c_);
  for (int p = 0; p < n; ++p)
    if (!test_bit(p)) all.set_bit(p);
  return all;
}

std::vector<Vertex> VertexSet::vertices() const {
  std::vector<Vertex> out;
  for (int i = 0; i < kVertexWords; ++i) {
    auto w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(vertex_at(c_, i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (const auto& v : s.vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace fibercone
