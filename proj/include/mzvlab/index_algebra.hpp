#ifndef MZVLAB_INDEX_ALGEBRA_HPP
#define MZVLAB_INDEX_ALGEBRA_HPP

#include <vector>

#include "mzvlab/index.hpp"

namespace mzvlab {

// True iff the index is empty or its first part exceeds 1.
inline bool admissible(const Index& k) { return k.empty() || k.first() > 1; }

// Hoffman dual: complement the set of partial sums inside {1..w-1} and
// read the result back as consecutive gaps.  Weight is preserved and
// the map is an involution.
Index hoffman_dual(const Index& k);

// Formal sum of the 2^(depth-1) indices obtained by replacing each
// separator with ',' or '+'.  All coefficients are 1.
FormalIndexSum star_expand(const Index& k);

// Same replacement for signed indices: a merged slot gets the sum of
// magnitudes and the product of signs.
FormalSignedSum star_expand_signed(const SignedIndex& s);

// Harmonic (quasi-shuffle) product with the empty index as unit:
//   k*l = (k1, k'*l) + (l1, k*l') + (k1+l1, k'*l')
FormalIndexSum stuffle(const Index& a, const Index& b);
FormalIndexSum stuffle(const FormalIndexSum& a, const FormalIndexSum& b);

// First entries added, tails stuffled.
FormalIndexSum circled_product(const Index& a, const Index& b);

// (m_1, m_2+1, ..., m_j+1); zero entries are allowed for i >= 2.
Index index_transform_mj(const std::vector<int>& m, int j);

// Reversed slice with per-entry increments: (m_j+d_j, ..., m_i+d_i).
// Returns the empty index when i > j.  Indices i, j are 1-based.
Index rev_slice_plus(const std::vector<int>& m, int i, int j,
                     const std::vector<int>& delta);

// Convenience: reversed slice shifted by +1 in every entry.
Index rev_slice_plus1(const std::vector<int>& m, int i, int j);

// All tuples of `parts` nonnegative integers summing to `total`, in
// lexicographically decreasing order of the first differing entry:
// (total,0,...), ..., (0,...,total).
std::vector<std::vector<int>> compositions(int total, int parts);

// All tuples of `parts` positive integers summing to `total`.
std::vector<std::vector<int>> compositions_positive(int total, int parts);

// All (c_1,...,c_p) >= 0 with sum j*c_j = p; one per partition of p.
std::vector<std::vector<int>> c_partitions(int p);

// Every index of the given exact weight (2^(w-1) compositions).
std::vector<Index> all_indices_of_weight(int w);

}  // namespace mzvlab

#endif
