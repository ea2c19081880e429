#ifndef FIBERCONE_FACET_COMPLEX_HPP_
#define FIBERCONE_FACET_COMPLEX_HPP_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fibercone/scroll_model.hpp"
#include "fibercone/vertex.hpp"

namespace fibercone {

// Shared, immutable per-scroll data that facet routines keep consulting: the
// matrix M and the leaves set of every alpha.
class ScrollContext {
 public:
  // Requires c >= d + 4 (UnsupportedRegimeError otherwise).
  explicit ScrollContext(ScrollSpec spec);

  const ScrollSpec& spec() const { return spec_; }
  int c() const { return spec_.c(); }
  int d() const { return spec_.d(); }
  int max_alpha() const { return spec_.c() - spec_.d() - 2; }
  const ScrollMatrix& matrix() const { return matrix_; }
  const LeavesProfile& profile(int alpha) const { return profiles_.at(alpha - 1); }
  const VertexSet& leaves(int alpha) const { return leaf_sets_.at(alpha - 1); }
  // The alpha whose leaves set equals `leaves`, if any.
  std::optional<int> alpha_of_leaves(const VertexSet& leaves) const;

 private:
  ScrollSpec spec_;
  ScrollMatrix matrix_;
  std::vector<LeavesProfile> profiles_;
  std::vector<VertexSet> leaf_sets_;
};

using ContextPtr = std::shared_ptr<const ScrollContext>;

ContextPtr make_context(const ScrollSpec& spec);

// A facet of the initial complex, tagged with its group index alpha.
class Facet {
 public:
  Facet(ContextPtr context, int alpha, VertexSet vertices)
      : context_(std::move(context)), alpha_(alpha), vertices_(vertices) {}

  const ScrollContext& context() const { return *context_; }
  const ContextPtr& context_ptr() const { return context_; }
  int alpha() const { return alpha_; }
  const VertexSet& vertices() const { return vertices_; }
  int size() const { return vertices_.size(); }
  bool contains(Vertex v) const { return vertices_.contains(v); }

  bool operator==(const Facet& o) const { return alpha_ == o.alpha_ && vertices_ == o.vertices_; }

 private:
  ContextPtr context_;
  int alpha_;
  VertexSet vertices_;
};

// Hasse diagram of (F, containment). Children are ordered by left endpoint.
struct FacetTree {
  Vertex root;
  std::map<Vertex, std::vector<Vertex>> children;
  std::map<Vertex, Vertex> parent;

  const std::vector<Vertex>& children_of(Vertex v) const { return children.at(v); }
  std::optional<Vertex> parent_of(Vertex v) const;
  bool has_right_sibling(Vertex v) const;
  std::vector<Vertex> leaves() const;
  int node_count() const { return static_cast<int>(children.size()); }
};

// Literal check of the binary-tree characterization: Hasse diagram is a
// binary tree rooted at (1,c); its leaves are the leaves set of some alpha;
// one-child nodes drop a unit interval that is not in the set; two-child
// nodes split their interval into two adjacent pieces.
bool is_facet(const ScrollSpec& spec, const std::vector<Vertex>& candidate);
bool is_facet(const ScrollContext& context, const VertexSet& candidate);

// Throws StructuralError if the facet does not pass is_facet.
FacetTree facet_tree(const Facet& facet);

// Builds the Hasse diagram without validating it. Throws StructuralError if a
// non-root element has no unique cover.
FacetTree hasse_diagram(const VertexSet& vertices, Vertex root);

// Facets listed in decreasing shelling order: alpha descending, then
// decreasing lex order of the complementary monomials. Groups are contiguous.
struct FacetEnumeration {
  struct Group {
    int alpha;
    std::size_t begin;
    std::size_t end;
  };

  ContextPtr context;
  std::vector<Facet> facets;
  std::vector<Group> groups;  // alpha descending

  const Group& group(int alpha) const;
};

FacetEnumeration enumerate_facets(const ScrollSpec& spec);
FacetEnumeration enumerate_facets(const ContextPtr& context);

// All trees of group alpha, unsorted.
std::vector<VertexSet> enumerate_group(const ScrollContext& context, int alpha);

// {(1,c), (2,c), ..., (c-2,c)} together with the leaves set of alpha. This is
// a facet, and then the greatest one of its group, exactly when (c-2,c-1) or
// (c-1,c) is among the leaves; otherwise (c-2,c) is a childless non-leaf and
// InternalError is thrown. The top group c - d - 2 always qualifies.
Facet first_facet(const ContextPtr& context, int alpha);
Facet first_facet(const ScrollSpec& spec, int alpha);

// The greatest facet of group alpha in the shelling order, for every alpha.
Facet greatest_facet(const ContextPtr& context, int alpha);

}  // namespace fibercone

#endif  // FIBERCONE_FACET_COMPLEX_HPP_
