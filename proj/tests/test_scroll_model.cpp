#include "doctest.h"

#include <numeric>
#include <set>
#include <sstream>

#include "fibercone/errors.hpp"
#include "fibercone/scroll_model.hpp"
#include "reference.hpp"

using namespace fibercone;

namespace {

const std::vector<std::vector<int>> kSpecs = {{5},       {6},       {7},          {1, 5},      {2, 4},
                                              {3, 3},    {2, 4, 5}, {2, 2, 2, 2}, {1, 2, 2, 4}, {2, 2, 4, 4},
                                              {1, 1, 6}, {3, 9},    {1, 1, 1, 1, 5}};

std::set<std::pair<int, int>> as_pairs(const std::vector<Vertex>& vs) {
  std::set<std::pair<int, int>> out;
  for (const auto& v : vs) out.insert({v.a, v.b});
  return out;
}

std::string str(const EntryName& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(ScrollSpec({}), PreconditionError);
  CHECK_THROWS_AS(ScrollSpec({0, 3}), PreconditionError);
  CHECK_THROWS_AS(ScrollSpec({4, 2}), PreconditionError);
  CHECK_THROWS_AS(ScrollSpec({10, 13}), PreconditionError);
  bool reordered = false;
  const auto s = ScrollSpec::normalized({4, 2, 4, 2}, &reordered);
  CHECK(reordered);
  CHECK(s.degrees() == std::vector<int>{2, 2, 4, 4});
  CHECK(s.c() == 12);
  CHECK(s.d() == 4);
  CHECK(s.has_tree_regime());
  CHECK_FALSE(ScrollSpec({2, 2, 2}).has_tree_regime());
}

TEST_CASE("matrix for (2,2,4,4) matches the worked example") {
  const auto m = build_matrix(ScrollSpec({2, 2, 4, 4}));
  const std::vector<std::string> top = {"x1_0", "x2_0", "x3_0", "x4_0", "x3_1", "x4_1",
                                        "x3_2", "x4_2", "x4_3", "x3_3", "x2_1", "x1_1"};
  const std::vector<std::string> bottom = {"x1_1", "x2_1", "x3_1", "x4_1", "x3_2", "x4_2",
                                           "x3_3", "x4_3", "x4_4", "x3_4", "x2_2", "x1_2"};
  REQUIRE(m.size() == 12);
  for (int k = 1; k <= 12; ++k) {
    CHECK(str(m.column(k).top) == top[k - 1]);
    CHECK(str(m.column(k).bottom) == bottom[k - 1]);
  }
}

TEST_CASE("single block and tiny matrices") {
  const auto m5 = build_matrix(ScrollSpec({5}));
  for (int k = 1; k <= 5; ++k) CHECK(m5.column(k).top == EntryName{1, k - 1});
  const auto m11 = build_matrix(ScrollSpec({1, 1}));
  REQUIRE(m11.size() == 2);
  CHECK(m11.column(1).top == EntryName{2, 0});
  CHECK(m11.column(2).top == EntryName{1, 0});
}

TEST_CASE("matrix agrees with the reference construction") {
  for (const auto& n : kSpecs) {
    CAPTURE(n.size());
    const auto m = build_matrix(ScrollSpec(n));
    const auto tops = ref::column_tops(n);
    REQUIRE(m.size() == static_cast<int>(tops.size()));
    for (int k = 1; k <= m.size(); ++k) {
      CHECK(m.column(k).top.block == tops[k - 1].first);
      CHECK(m.column(k).top.index == tops[k - 1].second);
      CHECK(m.column(k).bottom == EntryName{tops[k - 1].first, tops[k - 1].second + 1});
    }
  }
}

TEST_CASE("leaves of (2,2,4,4) at alpha 2") {
  const auto p = leaves_profile(ScrollSpec({2, 2, 4, 4}), 2);
  CHECK(p.gamma == std::vector<int>{12, 11, 5, 4});
  CHECK(p.ell == 3);
  CHECK(p.leaves == std::vector<Vertex>{{2, 3}, {3, 4}, {4, 5}, {5, 6}, {10, 11}, {11, 12}});
}

TEST_CASE("leaves sets: size, reference agreement, neighbouring difference") {
  for (const auto& n : kSpecs) {
    const ScrollSpec spec(n);
    if (!spec.has_tree_regime()) continue;
    const int top = spec.c() - spec.d() - 2;
    std::set<std::set<std::pair<int, int>>> seen;
    for (int alpha = 1; alpha <= top; ++alpha) {
      const auto p = leaves_profile(spec, alpha);
      CHECK(static_cast<int>(p.leaves.size()) == spec.d() + 2);
      const auto mine = as_pairs(p.leaves);
      CHECK(mine == ref::leaves(n, alpha));
      CHECK(mine.count({alpha, alpha + 1}) == 1);
      CHECK(p.leaves.front() == Vertex{alpha, alpha + 1});
      seen.insert(mine);
      if (alpha < top) {
        const auto next = as_pairs(leaves_profile(spec, alpha + 1).leaves);
        std::set<std::pair<int, int>> sym;
        std::set_symmetric_difference(mine.begin(), mine.end(), next.begin(), next.end(),
                                      std::inserter(sym, sym.end()));
        CHECK(sym.size() == 2);
      }
    }
    CHECK(static_cast<int>(seen.size()) == top);
  }
}

TEST_CASE("leaves profile preconditions") {
  CHECK_THROWS_AS(leaves_profile(ScrollSpec({2, 2, 2}), 1), PreconditionError);
  CHECK_THROWS_AS(leaves_profile(ScrollSpec({5}), 0), PreconditionError);
  CHECK_THROWS_AS(leaves_profile(ScrollSpec({5}), 3), PreconditionError);
}

TEST_CASE("minors") {
  const ScrollSpec spec({2, 2, 4, 4});
  const auto m = minor(spec, 1, 12);
  REQUIRE(m.terms.size() == 2);
  CHECK(m.terms[0].coefficient == 1);
  CHECK(m.terms[1].coefficient == -1);
  // x1_0 x1_2 - x1_1^2
  CHECK(m.terms[0].exponents == std::map<EntryName, int>{{{1, 0}, 1}, {{1, 2}, 1}});
  CHECK(m.terms[1].exponents == std::map<EntryName, int>{{{1, 1}, 2}});
  CHECK_THROWS_AS(minor(spec, 3, 3), InvalidVertexError);
  CHECK_THROWS_AS(minor(spec, 0, 3), InvalidVertexError);
  CHECK_THROWS_AS(minor(spec, 5, 13), InvalidVertexError);
}

TEST_CASE("distinct columns give distinct nonzero minors") {
  for (const auto& n : kSpecs) {
    const ScrollSpec spec(n);
    const auto matrix = build_matrix(spec);
    std::set<std::string> seen;
    for (int a = 1; a <= spec.c(); ++a)
      for (int b = a + 1; b <= spec.c(); ++b) {
        const auto p = minor(matrix, a, b);
        CHECK_FALSE(p.terms.empty());
        std::ostringstream os;
        os << p;
        CHECK(seen.insert(os.str()).second);
      }
  }
}
