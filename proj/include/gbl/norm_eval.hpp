#pragma once

#include "gbl/norm_spec.hpp"
#include "gbl/sparse_vector.hpp"

namespace gbl {

// Exact evaluation of any catalog norm on a finitely supported vector. Every
// supremum in the displayed formulas is reduced to a finite computation:
// bijection suprema by the rearrangement inequality (weights non-increasing),
// family suprema by scanning candidate minimum coordinates with greedy top-c
// selection, gap suprema over the finitely many active scales.
NormValue evaluate(const SparseVector& x, const NormSpec& spec);

inline double norm_of(const SparseVector& x, const NormSpec& spec) {
  return evaluate(x, spec).value;
}

// True when the defining formula depends only on coefficient moduli, so sign
// sweeps collapse to a single evaluation. Exact by construction of the family.
bool formula_unconditional(const NormSpec& spec);

// {min, max} of ||1_{eps S}|| over eps in {+-1}^S. Single evaluation for
// modulus-only formulas, exhaustive sweep otherwise.
struct SignedExtremes {
  double min_value, max_value;
  std::vector<int> min_signs, max_signs;  // aligned with sorted S
};
SignedExtremes signed_indicator_extremes(const std::vector<Index>& S, const NormSpec& spec);

}  // namespace gbl
