#pragma once

#include "gbl/norm_spec.hpp"
#include "gbl/sparse_vector.hpp"

namespace gbl {
namespace oracle {

// Reference evaluations by literal enumeration of the defining suprema:
// every admissible family member and every injection into weight slots is
// visited. Deliberately independent of the sorted-pairing reductions in
// norm_eval.cpp; these are the comparison targets for differential tests.
// Supports up to 8 nonzero coefficients.
double norm(const SparseVector& x, const NormSpec& spec);

// All greedy sets of order m by filtering every m-subset of [1, window].
std::vector<std::vector<Index>> greedy_sets(const SparseVector& x, int m, Index window);

// True when the oracle covers this family (rearrangement or family suprema).
bool covers(const NormSpec& spec);

}  // namespace oracle
}  // namespace gbl
