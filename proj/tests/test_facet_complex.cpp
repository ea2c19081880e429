#include "doctest.h"

#include <algorithm>
#include <set>

#include "fibercone/errors.hpp"
#include "fibercone/facet_complex.hpp"
#include "reference.hpp"

using namespace fibercone;

namespace {

ref::IntervalSet as_pairs(const VertexSet& s) {
  ref::IntervalSet out;
  for (const auto& v : s.vertices()) out.insert({v.a, v.b});
  return out;
}

std::vector<Vertex> first_facet_2244() {
  std::vector<Vertex> vs;
  for (int a = 1; a <= 10; ++a) vs.push_back({a, 12});
  for (Vertex v : {Vertex{2, 3}, {3, 4}, {4, 5}, {5, 6}, {10, 11}, {11, 12}}) vs.push_back(v);
  return vs;
}

const std::vector<Vertex> kFacet245 = {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7},  {1, 8},  {1, 9},
                                       {1, 11}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {9, 11}, {10, 11}};

}  // namespace

TEST_CASE("is_facet on the worked examples") {
  const ScrollSpec s2244({2, 2, 4, 4});
  auto f = first_facet_2244();
  CHECK(f.size() == 16);
  CHECK(is_facet(s2244, f));
  f.erase(std::find(f.begin(), f.end(), Vertex{10, 12}));
  CHECK_FALSE(is_facet(s2244, f));
  CHECK(is_facet(ScrollSpec({2, 4, 5}), kFacet245));
}

TEST_CASE("is_facet errors") {
  CHECK_THROWS_AS(is_facet(ScrollSpec({2, 2, 2}), {{1, 6}}), UnsupportedRegimeError);
  CHECK_THROWS_AS(is_facet(ScrollSpec({5}), {{1, 6}}), InvalidVertexError);
  CHECK_THROWS_AS(is_facet(ScrollSpec({5}), {{3, 3}}), InvalidVertexError);
  CHECK_THROWS_AS(make_context(ScrollSpec({1, 1, 4})), UnsupportedRegimeError);
}

TEST_CASE("tree of the (2,2,4,4) first facet") {
  const auto f = first_facet(ScrollSpec({2, 2, 4, 4}), 2);
  CHECK(f.vertices().vertices() == VertexSet(12, first_facet_2244()).vertices());
  const auto tree = facet_tree(f);
  CHECK(tree.root == Vertex{1, 12});
  CHECK(tree.children_of({1, 12}) == std::vector<Vertex>{{2, 12}});
  CHECK(tree.children_of({2, 12}) == std::vector<Vertex>{{2, 3}, {3, 12}});
  CHECK(tree.children_of({3, 12}) == std::vector<Vertex>{{3, 4}, {4, 12}});
  CHECK(tree.children_of({4, 12}) == std::vector<Vertex>{{4, 5}, {5, 12}});
  CHECK(tree.children_of({5, 12}) == std::vector<Vertex>{{5, 6}, {6, 12}});
  for (int a = 6; a <= 8; ++a) CHECK(tree.children_of({a, 12}) == std::vector<Vertex>{{a + 1, 12}});
  CHECK(tree.children_of({9, 12}) == std::vector<Vertex>{{10, 12}});
  CHECK(tree.children_of({10, 12}) == std::vector<Vertex>{{10, 11}, {11, 12}});
  CHECK(tree.node_count() == 16);
  CHECK(tree.leaves().size() == 6);
  CHECK(tree.has_right_sibling({2, 3}));
  CHECK_FALSE(tree.has_right_sibling({3, 12}));
  CHECK(tree.parent_of({10, 11}) == Vertex{10, 12});
  CHECK_FALSE(tree.parent_of({1, 12}).has_value());
}

TEST_CASE("facet_tree rejects non-facets") {
  const auto ctx = make_context(ScrollSpec({5}));
  VertexSet bad(5, {{1, 5}, {1, 3}, {2, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(facet_tree(Facet(ctx, 1, bad)), StructuralError);
}

TEST_CASE("enumeration equals the exhaustive subset filter") {
  for (const auto& n : std::vector<std::vector<int>>{{5}, {6}, {7}, {1, 5}, {2, 4}, {3, 3}}) {
    const ScrollSpec spec(n);
    const auto e = enumerate_facets(spec);
    std::vector<ref::IntervalSet> mine;
    for (const auto& f : e.facets) mine.push_back(as_pairs(f.vertices()));
    std::sort(mine.begin(), mine.end());
    const auto brute = ref::brute_force_facets(n);
    CHECK(mine == brute);
    // the library checker accepts exactly the same sets
    for (const auto& s : brute) {
      std::vector<Vertex> vs;
      for (const auto& [a, b] : s) vs.push_back({a, b});
      CHECK(is_facet(spec, vs));
    }
  }
}

TEST_CASE("structural invariants of every enumerated facet") {
  for (const auto& n : std::vector<std::vector<int>>{{5}, {8}, {2, 4}, {2, 4, 5}, {2, 2, 2, 2}, {1, 2, 2, 4}}) {
    const ScrollSpec spec(n);
    const auto e = enumerate_facets(spec);
    const int c = spec.c();
    const int d = spec.d();
    std::set<VertexSet> distinct;
    for (const auto& f : e.facets) {
      distinct.insert(f.vertices());
      REQUIRE(f.size() == c + d);
      CHECK(f.contains({1, c}));
      const auto vs = f.vertices().vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) CHECK_FALSE(vs[i].crosses(vs[j]));
      const auto tree = facet_tree(f);
      CHECK(tree.node_count() == c + d);
      CHECK(tree.leaves() == f.context().profile(f.alpha()).leaves);
      CHECK(f.alpha() == f.context().alpha_of_leaves(VertexSet(c, tree.leaves())));
      for (const auto& [node, kids] : tree.children) {
        if (kids.size() == 1) {
          CHECK(node.length() == kids[0].length() + 1);
          const Vertex dropped = kids[0].a == node.a ? Vertex{node.b - 1, node.b} : Vertex{node.a, node.a + 1};
          CHECK_FALSE(f.contains(dropped));
        } else if (kids.size() == 2) {
          CHECK(kids[0].a == node.a);
          CHECK(kids[0].b == kids[1].a);
          CHECK(kids[1].b == node.b);
        } else {
          CHECK(kids.empty());
        }
        if (node.is_unit()) CHECK(kids.empty());
      }
    }
    CHECK(distinct.size() == e.facets.size());
  }
}

TEST_CASE("groups are contiguous, descending, and led by the first facet") {
  const ScrollSpec spec({2, 2, 4, 4});
  const auto e = enumerate_facets(spec);
  REQUIRE(e.groups.size() == 6);
  std::size_t expected_begin = 0;
  int previous = 100;
  for (const auto& g : e.groups) {
    CHECK(g.begin == expected_begin);
    CHECK(g.alpha < previous);
    previous = g.alpha;
    expected_begin = g.end;
    for (std::size_t i = g.begin; i < g.end; ++i) CHECK(e.facets[i].alpha() == g.alpha);
    CHECK(e.facets[g.begin] == first_facet(e.context, g.alpha));
  }
  CHECK(expected_begin == e.facets.size());
  CHECK(e.group(2).alpha == 2);
}

TEST_CASE("facet counts depend only on c and d") {
  const auto count = [](std::vector<int> n) { return enumerate_facets(ScrollSpec(std::move(n))).facets.size(); };
  CHECK(count({1, 5}) == count({2, 4}));
  CHECK(count({2, 4}) == count({3, 3}));
  CHECK(count({1, 7}) == count({4, 4}));
  CHECK(count({1, 1, 6}) == count({2, 3, 3}));
  CHECK(count({5}) == 10);
  CHECK(count({6}) == 32);
  CHECK(count({7}) == 84);
}

TEST_CASE("first facet formula holds exactly when (c-2,c) has a leaf below it") {
  for (const auto& n : std::vector<std::vector<int>>{{5}, {6}, {9}, {1, 5}, {2, 4, 5}, {2, 2, 4, 4}, {1, 1, 1, 1, 5}, {3, 9}}) {
    const ScrollSpec spec(n);
    const auto e = enumerate_facets(spec);
    const int c = spec.c();
    for (int alpha = 1; alpha <= e.context->max_alpha(); ++alpha) {
      CAPTURE(c);
      CAPTURE(alpha);
      const auto greatest = greatest_facet(e.context, alpha);
      CHECK(greatest == e.facets[e.group(alpha).begin]);
      CHECK(ref::is_facet(n, as_pairs(greatest.vertices())));
      const auto& leaves = e.context->leaves(alpha);
      const bool formula_applies = leaves.contains({c - 1, c}) || leaves.contains({c - 2, c - 1});
      if (formula_applies) {
        CHECK(first_facet(e.context, alpha) == greatest);
      } else {
        CHECK_THROWS_AS(first_facet(e.context, alpha), InternalError);
      }
    }
    CHECK(e.context->leaves(e.context->max_alpha()).contains({c - 1, c}));
  }
}

TEST_CASE("greatest facet of a low group when the formula breaks down") {
  // n = (6), alpha = 1: (4,6) would be a childless non-leaf.
  const auto ctx = make_context(ScrollSpec({6}));
  const auto f = greatest_facet(ctx, 1);
  CHECK(f.vertices().vertices() == std::vector<Vertex>{{1, 2}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
}
