#include "fibercone/dual_quotients.hpp"

#include <algorithm>
#include <set>

#include "fibercone/errors.hpp"

namespace fibercone {

bool DualMonomial::lex_greater(const DualMonomial& other) const {
  // Supports sorted by decreasing variable are bit positions in increasing
  // order, so the first difference is the lowest bit of the symmetric
  // difference; whoever owns it is larger.
  const int p = (support_ ^ other.support_).first_position();
  return p >= 0 && support_.test_bit(p);
}

bool dual_lex_greater(const VertexSet& f, const VertexSet& g) {
  // The complement of f owns the first differing bit exactly when f does not.
  const int p = (f ^ g).first_position();
  return p >= 0 && !f.test_bit(p);
}

bool precedes(const Facet& f, const Facet& g) {
  if (f.context_ptr() != g.context_ptr() && f.context().spec() != g.context().spec())
    throw DomainError("cannot order facets of different scrolls");
  if (f.alpha() != g.alpha()) return f.alpha() > g.alpha();
  return dual_lex_greater(f.vertices(), g.vertices());
}

RuleMutation parse_rule_mutation(const std::string& name) {
  if (name.empty() || name == "none") return RuleMutation::kNone;
  if (name == "a") return RuleMutation::kA;
  if (name == "b") return RuleMutation::kB;
  if (name == "c1") return RuleMutation::kC1;
  if (name == "c2") return RuleMutation::kC2;
  throw PreconditionError("unknown rule mutation '" + name + "' (expected none, a, b, c1 or c2)");
}

std::string to_string(RuleMutation m) {
  switch (m) {
    case RuleMutation::kNone: return "none";
    case RuleMutation::kA: return "a";
    case RuleMutation::kB: return "b";
    case RuleMutation::kC1: return "c1";
    case RuleMutation::kC2: return "c2";
  }
  return "none";
}

std::vector<Vertex> predict_lg(const Facet& facet, RuleMutation mutation) {
  return predict_lg(facet, facet_tree(facet), mutation);
}

std::vector<Vertex> predict_lg(const Facet& facet, const FacetTree& tree, RuleMutation mutation) {
  const auto& ctx = facet.context();
  const int alpha = facet.alpha();
  const int last_group = ctx.max_alpha();

  // vertices() is sorted by (a, b), so each column slice F_b is a contiguous
  // run with increasing second coordinate.
  const auto all = facet.vertices().vertices();
  std::vector<Vertex> out;
  auto run = all.begin();
  while (run != all.end()) {
    const int b = run->a;
    auto stop = std::find_if(run, all.end(), [b](const Vertex& v) { return v.a != b; });
    const int k = static_cast<int>(stop - run);
    for (int j = 1; j <= k; ++j) {
      const Vertex v = *(run + (j - 1));
      bool include = false;
      if (j == k) {
        include = mutation == RuleMutation::kA;
      } else if (j >= 2) {
        const bool right_sibling = mutation != RuleMutation::kB && tree.has_right_sibling(v);
        include = right_sibling || tree.children_of(v).size() == 2;
      } else if (v.b == b + 1) {
        switch (mutation) {
          case RuleMutation::kC1: include = false; break;
          case RuleMutation::kC2: include = b == alpha; break;
          default: include = b == alpha && alpha != last_group; break;
        }
      } else {
        include = true;
      }
      if (include) out.push_back(v);
    }
    run = stop;
  }
  return out;
}

std::vector<Vertex> ColonReport::linear_generators() const {
  std::vector<Vertex> out;
  for (const auto& g : computed_generators)
    if (g.size() == 1) out.push_back(g.vertices().front());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<const ColonReport*> LinearQuotientsResult::failures() const {
  std::vector<const ColonReport*> out;
  for (const auto& r : reports)
    if (!r.linear || !r.matches_prediction) out.push_back(&r);
  return out;
}

namespace {

// Collects the difference sets F \ F' and keeps only what can still be an
// inclusion-minimal one. Singletons are tracked as a union bitmask; a larger
// set that meets it is dominated by one of those singletons.
class ColonAccumulator {
 public:
  explicit ColonAccumulator(int c) : singles_(c) {}

  void add(const VertexSet& diff) {
    if (diff.size() == 1) {
      singles_ |= diff;
    } else if (!diff.intersects(singles_)) {
      pending_.push_back(diff);
    }
  }

  const VertexSet& singles() const { return singles_; }

  std::vector<VertexSet> minimal() const {
    std::vector<VertexSet> out;
    for (const auto& v : singles_.vertices()) {
      VertexSet s(singles_.columns());
      s.insert(v);
      out.push_back(s);
    }
    std::set<VertexSet> rest;
    for (const auto& p : pending_)
      if (!p.intersects(singles_)) rest.insert(p);
    for (const auto& p : rest) {
      bool is_min = std::none_of(rest.begin(), rest.end(),
                                 [&](const VertexSet& q) { return q != p && q.subset_of(p); });
      if (is_min) out.push_back(p);
    }
    return out;
  }

 private:
  VertexSet singles_;
  std::vector<VertexSet> pending_;
};

ColonReport make_report(const Facet& facet, const FacetTree& tree, const ColonAccumulator& acc,
                        RuleMutation mutation) {
  ColonReport r{facet, acc.minimal(), predict_lg(facet, tree, mutation)};
  r.linear = std::all_of(r.computed_generators.begin(), r.computed_generators.end(),
                         [](const VertexSet& g) { return g.size() == 1; });
  std::sort(r.predicted_lg.begin(), r.predicted_lg.end());
  r.matches_prediction = r.linear && r.linear_generators() == r.predicted_lg;
  return r;
}

FacetTree tree_of(const Facet& f) { return hasse_diagram(f.vertices(), Vertex{1, f.context().c()}); }

}  // namespace

ColonReport colon_generators(const Facet& facet, std::span<const Facet> all_facets, RuleMutation mutation) {
  const auto& ctx = facet.context();
  const Facet top = first_facet(facet.context_ptr(), ctx.max_alpha());
  const Facet* greatest = nullptr;
  for (const auto& g : all_facets) {
    if (!greatest || precedes(g, *greatest)) greatest = &g;
  }
  if (!greatest || !(*greatest == top))
    throw DomainError("facet list is incomplete: the first facet of the last group is missing");

  ColonAccumulator acc(ctx.c());
  for (const auto& g : all_facets)
    if (precedes(g, facet)) acc.add(facet.vertices() - g.vertices());
  return make_report(facet, facet_tree(facet), acc, mutation);
}

LinearQuotientsResult verify_linear_quotients(const ScrollSpec& spec, const QuotientOptions& options) {
  return verify_linear_quotients(enumerate_facets(spec), options);
}

LinearQuotientsResult verify_linear_quotients(const FacetEnumeration& facets, const QuotientOptions& options) {
  if (options.mode == ScanMode::kFull) return check_order(facets.facets, options.mutation);

  const auto& list = facets.facets;
  const int c = facets.context->c();
  LinearQuotientsResult out;
  out.reports.reserve(list.size());

  // before[g] = union of every facet in groups listed before group g.
  std::vector<VertexSet> before(facets.groups.size(), VertexSet(c));
  for (std::size_t g = 1; g < facets.groups.size(); ++g) {
    before[g] = before[g - 1];
    const auto& prev = facets.groups[g - 1];
    for (std::size_t i = prev.begin; i < prev.end; ++i) before[g] |= list[i].vertices();
  }

  for (std::size_t g = 0; g < facets.groups.size(); ++g) {
    const auto& grp = facets.groups[g];
    const Vertex lead{grp.alpha, grp.alpha + 1};
    // Every earlier facet misses `lead`, so every cross-group difference set
    // contains it and {lead}, once seen, dominates the rest.
    const bool can_stop_early = !before[g].contains(lead);
    VertexSet lead_only(c);
    lead_only.insert(lead);

    for (std::size_t i = grp.begin; i < grp.end; ++i) {
      const Facet& f = list[i];
      ColonAccumulator acc(c);
      for (std::size_t j = grp.begin; j < i; ++j) acc.add(f.vertices() - list[j].vertices());
      for (std::size_t j = grp.begin; j-- > 0;) {
        const VertexSet diff = f.vertices() - list[j].vertices();
        acc.add(diff);
        if (can_stop_early && diff == lead_only) break;
      }
      out.reports.push_back(make_report(f, tree_of(f), acc, options.mutation));
      const auto& r = out.reports.back();
      out.pass = out.pass && r.linear && r.matches_prediction;
    }
  }
  return out;
}

LinearQuotientsResult check_order(std::span<const Facet> ordered, RuleMutation mutation) {
  LinearQuotientsResult out;
  out.reports.reserve(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Facet& f = ordered[i];
    ColonAccumulator acc(f.context().c());
    for (std::size_t j = 0; j < i; ++j) acc.add(f.vertices() - ordered[j].vertices());
    out.reports.push_back(make_report(f, tree_of(f), acc, mutation));
    const auto& r = out.reports.back();
    out.pass = out.pass && r.linear && r.matches_prediction;
  }
  return out;
}

std::vector<Facet> swap_adjacent_groups(const FacetEnumeration& facets, int alpha) {
  const auto& upper = facets.group(alpha + 1);
  const auto& lower = facets.group(alpha);
  std::vector<Facet> out(facets.facets.begin(), facets.facets.begin() + upper.begin);
  out.insert(out.end(), facets.facets.begin() + lower.begin, facets.facets.begin() + lower.end);
  out.insert(out.end(), facets.facets.begin() + upper.begin, facets.facets.begin() + upper.end);
  out.insert(out.end(), facets.facets.begin() + lower.end, facets.facets.end());
  return out;
}

}  // namespace fibercone
