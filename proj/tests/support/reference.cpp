#include "reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ref {

std::vector<std::pair<int, int>> column_tops(const std::vector<int>& n) {
  std::vector<std::pair<int, int>> tops;
  const int widest = *std::max_element(n.begin(), n.end());
  for (int p = 0; p + 1 < widest; ++p)
    for (int i = 0; i < static_cast<int>(n.size()); ++i)
      if (p <= n[i] - 2) tops.emplace_back(i + 1, p);
  for (int i = static_cast<int>(n.size()) - 1; i >= 0; --i) tops.emplace_back(i + 1, n[i] - 1);
  return tops;
}

std::vector<int> column_blocks(const std::vector<int>& n) {
  std::vector<int> out;
  for (const auto& [block, index] : column_tops(n)) out.push_back(block);
  return out;
}

IntervalSet leaves(const std::vector<int>& n, int alpha) {
  const int c = std::accumulate(n.begin(), n.end(), 0);
  const int d = static_cast<int>(n.size());
  const auto blocks = column_blocks(n);
  std::set<int> gamma;
  for (int i = 1; i <= d; ++i)
    for (int k = alpha + 2; k <= c; ++k)
      if (blocks[k - 1] == i) {
        gamma.insert(k);
        break;
      }
  for (int ell = 2; ell <= d + 1; ++ell) {
    std::set<int> want;
    for (int k = alpha + 2; k <= alpha + ell; ++k) want.insert(k);
    for (int k = c - d + ell; k <= c; ++k) want.insert(k);
    if (want != gamma) continue;
    IntervalSet out;
    for (int b = alpha; b <= alpha + ell; ++b) out.insert({b, b + 1});
    for (int b = c - d + ell - 1; b <= c - 1; ++b) out.insert({b, b + 1});
    return out;
  }
  throw std::logic_error("no ell for this alpha");
}

namespace {

bool inside(const Interval& v, const Interval& w) { return v != w && w.first <= v.first && v.second <= w.second; }
int length(const Interval& v) { return v.second - v.first; }

}  // namespace

bool is_facet(const std::vector<int>& n, const IntervalSet& f) {
  const int c = std::accumulate(n.begin(), n.end(), 0);
  const int d = static_cast<int>(n.size());
  const Interval root{1, c};
  if (!f.count(root)) return false;

  std::map<Interval, std::vector<Interval>> children;
  for (const auto& v : f) children[v];
  for (const auto& v : f) {
    if (v == root) continue;
    std::vector<Interval> covers;
    for (const auto& w : f) {
      if (!inside(v, w)) continue;
      bool minimal = true;
      for (const auto& u : f)
        if (inside(v, u) && inside(u, w)) minimal = false;
      if (minimal) covers.push_back(w);
    }
    if (covers.size() != 1) return false;
    children[covers.front()].push_back(v);
  }

  IntervalSet tree_leaves;
  for (auto& [node, kids] : children) {
    std::sort(kids.begin(), kids.end());
    if (kids.empty()) {
      tree_leaves.insert(node);
    } else if (kids.size() == 1) {
      const auto& k = kids.front();
      if (length(node) != length(k) + 1) return false;
      Interval dropped;
      if (k.first == node.first)
        dropped = {node.second - 1, node.second};
      else if (k.second == node.second)
        dropped = {node.first, node.first + 1};
      else
        return false;
      if (f.count(dropped)) return false;
    } else if (kids.size() == 2) {
      const auto& l = kids[0];
      const auto& r = kids[1];
      if (l.second > r.first) return false;
      if (length(l) + length(r) != length(node)) return false;
    } else {
      return false;
    }
  }
  for (int alpha = 1; alpha <= c - d - 2; ++alpha)
    if (leaves(n, alpha) == tree_leaves) return true;
  return false;
}

std::vector<IntervalSet> brute_force_facets(const std::vector<int>& n) {
  const int c = std::accumulate(n.begin(), n.end(), 0);
  const int d = static_cast<int>(n.size());
  std::vector<Interval> all;
  for (int a = 1; a <= c; ++a)
    for (int b = a + 1; b <= c; ++b) all.push_back({a, b});
  const int k = c + d;
  std::vector<IntervalSet> out;
  if (k > static_cast<int>(all.size())) return out;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    IntervalSet s;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) s.insert(all[i]);
    if (is_facet(n, s)) out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<IntervalSet>> colon_generators(const std::vector<IntervalSet>& order) {
  std::vector<std::vector<IntervalSet>> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::set<IntervalSet> diffs;
    for (std::size_t j = 0; j < i; ++j) {
      IntervalSet diff;
      std::set_difference(order[i].begin(), order[i].end(), order[j].begin(), order[j].end(),
                          std::inserter(diff, diff.end()));
      diffs.insert(diff);
    }
    std::vector<IntervalSet> minimal;
    for (const auto& s : diffs) {
      bool keep = true;
      for (const auto& t : diffs)
        if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) keep = false;
      if (keep) minimal.push_back(s);
    }
    out.push_back(minimal);
  }
  return out;
}

std::vector<std::int64_t> face_counts(const std::vector<IntervalSet>& facets, int max_k) {
  std::map<Interval, int> index;
  for (const auto& f : facets)
    for (const auto& v : f) index.emplace(v, 0);
  int next = 0;
  for (auto& [v, i] : index) i = next++;
  if (next > 64) throw std::length_error("too many vertices for the reference face walk");

  std::vector<std::set<std::uint64_t>> faces(max_k + 1);
  for (const auto& f : facets) {
    std::vector<int> ids;
    for (const auto& v : f) ids.push_back(index.at(v));
    // All subsets of size <= max_k, grown one element at a time.
    std::vector<std::pair<std::uint64_t, std::size_t>> frontier{{0, 0}};
    for (int size = 0; size <= max_k; ++size) {
      std::vector<std::pair<std::uint64_t, std::size_t>> grown;
      for (const auto& [mask, from] : frontier) {
        faces[size].insert(mask);
        for (std::size_t i = from; i < ids.size(); ++i) grown.push_back({mask | (std::uint64_t{1} << ids[i]), i + 1});
      }
      frontier.swap(grown);
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& s : faces) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::int64_t> h_from_hilbert(const std::vector<std::int64_t>& hf, int dim) {
  std::vector<std::int64_t> h;
  for (std::size_t k = 0; k < hf.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j <= k; ++j) s += ((j % 2) ? -1 : 1) * choose(dim, static_cast<std::int64_t>(j)) * hf[k - j];
    h.push_back(s);
  }
  return h;
}

}  // namespace ref
