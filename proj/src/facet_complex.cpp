#include "fibercone/facet_complex.hpp"

#include <algorithm>
#include <sstream>

#include "fibercone/dual_quotients.hpp"
#include "fibercone/errors.hpp"

namespace fibercone {

ScrollContext::ScrollContext(ScrollSpec spec) : spec_(std::move(spec)), matrix_(build_matrix(spec_)) {
  if (!spec_.has_tree_regime()) {
    std::ostringstream msg;
    msg << "scroll " << spec_ << " has c < d + 4; the initial complex is not built in this regime";
    throw UnsupportedRegimeError(msg.str());
  }
  for (int alpha = 1; alpha <= max_alpha(); ++alpha) {
    profiles_.push_back(leaves_profile(spec_, matrix_, alpha));
    leaf_sets_.emplace_back(c(), profiles_.back().leaves);
  }
}

std::optional<int> ScrollContext::alpha_of_leaves(const VertexSet& leaves) const {
  for (int alpha = 1; alpha <= max_alpha(); ++alpha)
    if (leaf_sets_[alpha - 1] == leaves) return alpha;
  return std::nullopt;
}

ContextPtr make_context(const ScrollSpec& spec) { return std::make_shared<const ScrollContext>(spec); }

std::optional<Vertex> FacetTree::parent_of(Vertex v) const {
  auto it = parent.find(v);
  if (it == parent.end()) return std::nullopt;
  return it->second;
}

bool FacetTree::has_right_sibling(Vertex v) const {
  auto p = parent_of(v);
  if (!p) return false;
  const auto& kids = children.at(*p);
  return kids.size() == 2 && kids.front() == v;
}

std::vector<Vertex> FacetTree::leaves() const {
  std::vector<Vertex> out;
  for (const auto& [v, kids] : children)
    if (kids.empty()) out.push_back(v);
  return out;
}

namespace {

// Minimal strict supersets of v inside `all`.
std::vector<Vertex> covers(const std::vector<Vertex>& all, Vertex v) {
  std::vector<Vertex> up;
  for (const auto& u : all)
    if (u != v && v.within(u)) up.push_back(u);
  std::vector<Vertex> minimal;
  for (const auto& u : up) {
    bool is_min = std::none_of(up.begin(), up.end(), [&](const Vertex& w) { return w != u && w.within(u); });
    if (is_min) minimal.push_back(u);
  }
  return minimal;
}

}  // namespace

FacetTree hasse_diagram(const VertexSet& vertices, Vertex root) {
  const auto all = vertices.vertices();
  FacetTree tree;
  tree.root = root;
  for (const auto& v : all) tree.children[v];
  if (!vertices.contains(root)) throw StructuralError("root is not part of the vertex set");
  for (const auto& v : all) {
    if (v == root) continue;
    auto up = covers(all, v);
    if (up.size() != 1) {
      std::ostringstream msg;
      msg << "vertex " << v << " has " << up.size() << " immediate covers";
      throw StructuralError(msg.str());
    }
    tree.parent[v] = up.front();
    tree.children[up.front()].push_back(v);
  }
  for (auto& [v, kids] : tree.children) std::sort(kids.begin(), kids.end());
  return tree;
}

bool is_facet(const ScrollSpec& spec, const std::vector<Vertex>& candidate) {
  if (!spec.has_tree_regime())
    throw UnsupportedRegimeError("facet recognition needs c >= d + 4");
  for (const auto& v : candidate)
    if (v.a < 1 || v.a >= v.b || v.b > spec.c()) throw InvalidVertexError("vertex outside [1, c]");
  ScrollContext context(spec);
  return is_facet(context, VertexSet(spec.c(), candidate));
}

bool is_facet(const ScrollContext& context, const VertexSet& candidate) {
  const Vertex root{1, context.c()};
  if (!candidate.contains(root)) return false;

  FacetTree tree;
  try {
    tree = hasse_diagram(candidate, root);
  } catch (const StructuralError&) {
    return false;
  }

  VertexSet leaves(context.c());
  for (const auto& [node, kids] : tree.children) {
    switch (kids.size()) {
      case 0:
        leaves.insert(node);
        break;
      case 1: {
        const Vertex& child = kids.front();
        if (node.length() != child.length() + 1) return false;
        const Vertex dropped = child.a == node.a ? Vertex{node.b - 1, node.b} : Vertex{node.a, node.a + 1};
        if (candidate.contains(dropped)) return false;
        break;
      }
      case 2: {
        const Vertex& left = kids[0];
        const Vertex& right = kids[1];
        if (!left.disjoint_from(right)) return false;
        if (left.length() + right.length() != node.length()) return false;
        break;
      }
      default:
        return false;
    }
  }
  return context.alpha_of_leaves(leaves).has_value();
}

FacetTree facet_tree(const Facet& facet) {
  if (!is_facet(facet.context(), facet.vertices())) {
    std::ostringstream msg;
    msg << facet.vertices() << " is not a facet of " << facet.context().spec();
    throw StructuralError(msg.str());
  }
  return hasse_diagram(facet.vertices(), Vertex{1, facet.context().c()});
}

const FacetEnumeration::Group& FacetEnumeration::group(int alpha) const {
  for (const auto& g : groups)
    if (g.alpha == alpha) return g;
  throw PreconditionError("no facet group for alpha " + std::to_string(alpha));
}

namespace {

// Subtrees rooted at interval (a, b) whose leaves are exactly the leaves-set
// intervals lying inside (a, b). Unit intervals have no children, so a unit
// node is a leaf and must belong to the leaves set.
class GroupEnumerator {
 public:
  GroupEnumerator(int c, const VertexSet& leaves) : c_(c), leaf_(c + 1, false), memo_(c + 1) {
    for (const auto& v : leaves.vertices()) leaf_[v.a] = true;
    for (auto& row : memo_) row.resize(c + 1);
  }

  const std::vector<VertexSet>& subtrees(int a, int b) {
    auto& slot = memo_[a][b];
    if (slot) return *slot;
    slot.emplace();
    auto& out = *slot;
    const Vertex node{a, b};
    auto with_node = [&](VertexSet s) {
      s.insert(node);
      out.push_back(s);
    };

    if (b == a + 1) {
      if (leaf_[a]) with_node(VertexSet(c_));
      return out;
    }
    bool has_leaf = false;
    for (int x = a; x < b; ++x) has_leaf = has_leaf || leaf_[x];
    if (!has_leaf) return out;

    // One child: drop the unit interval at either end, which then cannot be
    // in the facet and so must not be a leaf.
    if (!leaf_[a])
      for (const auto& s : subtrees(a + 1, b)) with_node(s);
    if (!leaf_[b - 1])
      for (const auto& s : subtrees(a, b - 1)) with_node(s);
    // Two children splitting at m.
    for (int m = a + 1; m < b; ++m) {
      const auto& lefts = subtrees(a, m);
      if (lefts.empty()) continue;
      const auto& rights = subtrees(m, b);
      for (const auto& l : lefts)
        for (const auto& r : rights) with_node(l | r);
    }
    return out;
  }

 private:
  int c_;
  std::vector<bool> leaf_;
  std::vector<std::vector<std::optional<std::vector<VertexSet>>>> memo_;
};

}  // namespace

std::vector<VertexSet> enumerate_group(const ScrollContext& context, int alpha) {
  GroupEnumerator gen(context.c(), context.leaves(alpha));
  return gen.subtrees(1, context.c());
}

FacetEnumeration enumerate_facets(const ScrollSpec& spec) { return enumerate_facets(make_context(spec)); }

FacetEnumeration enumerate_facets(const ContextPtr& context) {
  FacetEnumeration out;
  out.context = context;
  const int expected_size = context->c() + context->d();
  for (int alpha = context->max_alpha(); alpha >= 1; --alpha) {
    auto sets = enumerate_group(*context, alpha);
    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& x, const VertexSet& y) { return dual_lex_greater(x, y); });
    FacetEnumeration::Group g{alpha, out.facets.size(), 0};
    for (auto& s : sets) {
      if (s.size() != expected_size) throw InternalError("enumerated facet has the wrong size");
      out.facets.emplace_back(context, alpha, s);
    }
    g.end = out.facets.size();
    out.groups.push_back(g);
  }
  return out;
}

Facet first_facet(const ScrollSpec& spec, int alpha) { return first_facet(make_context(spec), alpha); }

Facet first_facet(const ContextPtr& context, int alpha) {
  if (alpha < 1 || alpha > context->max_alpha())
    throw PreconditionError("alpha must lie in [1, c - d - 2]");
  const int c = context->c();
  VertexSet s = context->leaves(alpha);
  for (int a = 1; a <= c - 2; ++a) s.insert({a, c});
  if (!is_facet(*context, s))
    throw InternalError("{(1,c), ..., (c-2,c)} with the leaves of alpha " + std::to_string(alpha) +
                        " is not a facet; use greatest_facet");
  return Facet(context, alpha, s);
}

Facet greatest_facet(const ContextPtr& context, int alpha) {
  if (alpha < 1 || alpha > context->max_alpha())
    throw PreconditionError("alpha must lie in [1, c - d - 2]");
  const auto group = enumerate_group(*context, alpha);
  if (group.empty()) throw InternalError("empty facet group");
  auto best = group.front();
  for (const auto& s : group)
    if (dual_lex_greater(s, best)) best = s;
  return Facet(context, alpha, best);
}

}  // namespace fibercone
