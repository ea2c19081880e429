#ifndef FIBERCONE_DUAL_QUOTIENTS_HPP_
#define FIBERCONE_DUAL_QUOTIENTS_HPP_

#include <span>
#include <string>
#include <vector>

#include "fibercone/facet_complex.hpp"

namespace fibercone {

// Squarefree generator of the Alexander dual attached to a facet F: the
// product of T_v over v outside F.
class DualMonomial {
 public:
  explicit DualMonomial(const Facet& facet) : support_(facet.vertices().complement()) {}
  explicit DualMonomial(VertexSet support) : support_(support) {}

  const VertexSet& support() const { return support_; }
  int degree() const { return support_.size(); }

  // Lex order with respect to the variable order: compare the supports sorted
  // by decreasing variable, the first difference decides.
  bool lex_greater(const DualMonomial& other) const;

 private:
  VertexSet support_;
};

// DualMonomial(f) >_lex DualMonomial(g) for vertex sets of equal size.
bool dual_lex_greater(const VertexSet& f, const VertexSet& g);

// F strictly before G in the shelling order: larger alpha first, then larger
// dual monomial. Throws DomainError for facets of different scrolls.
bool precedes(const Facet& f, const Facet& g);

// Hooks that deliberately break one rule of predict_lg, to show the checker
// catches it.
enum class RuleMutation {
  kNone,
  kA,   // include the top vertex of every column slice
  kB,   // ignore the right-sibling condition
  kC1,  // never include a leftmost unit leaf
  kC2,  // include (alpha, alpha+1) even in the first group
};

RuleMutation parse_rule_mutation(const std::string& name);
std::string to_string(RuleMutation m);

// Predicted linear generators of the colon ideal of F, read off the facet
// tree slice by slice.
std::vector<Vertex> predict_lg(const Facet& facet, RuleMutation mutation = RuleMutation::kNone);
std::vector<Vertex> predict_lg(const Facet& facet, const FacetTree& tree,
                               RuleMutation mutation = RuleMutation::kNone);

struct ColonReport {
  Facet facet;
  // Inclusion-minimal sets among F \ F' over predecessors F'.
  std::vector<VertexSet> computed_generators;
  std::vector<Vertex> predicted_lg;
  bool linear = true;
  bool matches_prediction = true;

  // Singleton generators, as vertices. Meaningful when linear.
  std::vector<Vertex> linear_generators() const;
  int quotient_degree() const { return static_cast<int>(computed_generators.size()); }
};

enum class ScanMode {
  // Stops scanning earlier groups once {(alpha, alpha+1)} has been found,
  // after checking that (alpha, alpha+1) lies outside every earlier facet.
  kFast,
  // Every predecessor is compared.
  kFull,
};

// Colon generators of `facet` against every member of `all_facets` that
// precedes it. `all_facets` must be the complete facet list of the scroll.
ColonReport colon_generators(const Facet& facet, std::span<const Facet> all_facets,
                             RuleMutation mutation = RuleMutation::kNone);

struct LinearQuotientsResult {
  std::vector<ColonReport> reports;  // in the order checked
  bool pass = true;

  std::vector<const ColonReport*> failures() const;
};

struct QuotientOptions {
  ScanMode mode = ScanMode::kFast;
  RuleMutation mutation = RuleMutation::kNone;
};

// Certifies linear quotients in the shelling order for the whole complex.
LinearQuotientsResult verify_linear_quotients(const ScrollSpec& spec, const QuotientOptions& options = {});
LinearQuotientsResult verify_linear_quotients(const FacetEnumeration& facets, const QuotientOptions& options = {});

// Same check under an arbitrary facet order (always a full scan). Used for
// order-mutation diagnostics.
LinearQuotientsResult check_order(std::span<const Facet> ordered, RuleMutation mutation = RuleMutation::kNone);

// Swaps the positions of two adjacent groups in the shelling order.
std::vector<Facet> swap_adjacent_groups(const FacetEnumeration& facets, int alpha);

}  // namespace fibercone

#endif  // FIBERCONE_DUAL_QUOTIENTS_HPP_
