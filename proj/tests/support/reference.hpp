#ifndef FIBERCONE_TESTS_REFERENCE_HPP_
#define FIBERCONE_TESTS_REFERENCE_HPP_

// Slow, independent re-derivations used as test oracles. Nothing here calls
// into the library beyond plain data types, so a bug in the library cannot
// hide behind the same bug in its checker.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace ref {

using Interval = std::pair<int, int>;
using IntervalSet = std::set<Interval>;

// Block index (1-based) of every column of the rearranged matrix.
std::vector<int> column_blocks(const std::vector<int>& n);

// Top-row entry (block, index) of every column.
std::vector<std::pair<int, int>> column_tops(const std::vector<int>& n);

// Leaves of group alpha, from the gamma/ell description.
IntervalSet leaves(const std::vector<int>& n, int alpha);

// Binary-tree facet conditions, evaluated on the Hasse diagram directly.
bool is_facet(const std::vector<int>& n, const IntervalSet& f);

// Every (c+d)-subset of the vertex set that passes is_facet.
std::vector<IntervalSet> brute_force_facets(const std::vector<int>& n);

// Inclusion-minimal members of { f \ g : g before f in `order` } for each f.
std::vector<std::vector<IntervalSet>> colon_generators(const std::vector<IntervalSet>& order);

// Faces with k vertices for k = 0..max_k, by collecting subsets of facets.
std::vector<std::int64_t> face_counts(const std::vector<IntervalSet>& facets, int max_k);

// h_0..h_k from a Hilbert function prefix HF(0..k) and Krull dimension dim:
// h(z) = (1 - z)^dim * sum HF(t) z^t, truncated.
std::vector<std::int64_t> h_from_hilbert(const std::vector<std::int64_t>& hf, int dim);

std::int64_t choose(std::int64_t n, std::int64_t k);

}  // namespace ref

#endif  // FIBERCONE_TESTS_REFERENCE_HPP_
