#ifndef FIBERCONE_SCROLL_MODEL_HPP_
#define FIBERCONE_SCROLL_MODEL_HPP_

#include <compare>
#include <map>
#include <ostream>
#include <vector>

#include "fibercone/vertex.hpp"

namespace fibercone {

// Scroll type n_1 <= ... <= n_d. The scroll, its ideal, and everything derived
// below are determined by this sequence.
class ScrollSpec {
 public:
  // Throws PreconditionError unless `degrees` is non-empty, positive and
  // non-decreasing, with c within kMaxColumns.
  explicit ScrollSpec(std::vector<int> degrees);

  // Sorts first. Returns true through `reordered` when the input was unsorted.
  static ScrollSpec normalized(std::vector<int> degrees, bool* reordered = nullptr);

  const std::vector<int>& degrees() const { return n_; }
  // n_i for 1-based block i.
  int degree(int block) const { return n_[block - 1]; }
  int c() const { return c_; }
  int d() const { return static_cast<int>(n_.size()); }
  // c >= d + 4: the regime in which the initial complex is described by
  // binary trees. Otherwise the fiber cone is a Grassmannian coordinate ring.
  bool has_tree_regime() const { return c_ >= d() + 4; }

  bool operator==(const ScrollSpec&) const = default;

 private:
  std::vector<int> n_;
  int c_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ScrollSpec& spec);

// The variable x_{block,index}; block is 1-based, index runs over 0..n_block.
struct EntryName {
  int block = 0;
  int index = 0;
  auto operator<=>(const EntryName&) const = default;
};

std::ostream& operator<<(std::ostream& os, const EntryName& e);

// A column of M: consecutive entries of one catalecticant block.
struct MatrixColumn {
  EntryName top;
  EntryName bottom;
  int block() const { return top.block; }
  bool operator==(const MatrixColumn&) const = default;
};

// The 2 x c rearrangement M of the scroll matrix X. Columns are addressed
// 1-based, matching the interval arithmetic on vertices.
class ScrollMatrix {
 public:
  explicit ScrollMatrix(std::vector<MatrixColumn> columns) : columns_(std::move(columns)) {}

  int size() const { return static_cast<int>(columns_.size()); }
  const MatrixColumn& column(int k) const { return columns_.at(k - 1); }
  const std::vector<MatrixColumn>& columns() const { return columns_; }

 private:
  std::vector<MatrixColumn> columns_;
};

// Round-robin over the non-last columns of each block (position-major, block
// index minor, exhausted blocks skipped), followed by the last column of
// blocks d, d-1, ..., 1.
ScrollMatrix build_matrix(const ScrollSpec& spec);

struct LeavesProfile {
  int alpha = 0;
  // gamma[i - 1] is the least column index >= alpha + 2 carrying block i.
  std::vector<int> gamma;
  int ell = 0;
  // The unit intervals that are the leaves of every facet tree in group alpha,
  // sorted left to right.
  std::vector<Vertex> leaves;
};

// Requires c >= d + 4 and 1 <= alpha <= c - d - 2.
LeavesProfile leaves_profile(const ScrollSpec& spec, int alpha);
LeavesProfile leaves_profile(const ScrollSpec& spec, const ScrollMatrix& matrix, int alpha);

struct MinorTerm {
  int coefficient = 0;
  std::map<EntryName, int> exponents;
  bool operator==(const MinorTerm&) const = default;
};

// det(M_{a,b}) as a polynomial in the x variables, like terms combined.
struct MinorPolynomial {
  std::vector<MinorTerm> terms;
  bool operator==(const MinorPolynomial&) const = default;
};

std::ostream& operator<<(std::ostream& os, const MinorPolynomial& p);

// top(a) * bottom(b) - top(b) * bottom(a). Throws InvalidVertexError unless
// 1 <= a < b <= c; throws InternalError if the result cancels to zero.
MinorPolynomial minor(const ScrollSpec& spec, int a, int b);
MinorPolynomial minor(const ScrollMatrix& matrix, int a, int b);

}  // namespace fibercone

#endif  // FIBERCONE_SCROLL_MODEL_HPP_
