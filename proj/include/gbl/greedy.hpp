#pragma once

#include <string>
#include <vector>

#include "gbl/index_sequence.hpp"
#include "gbl/norm_eval.hpp"
#include "gbl/sparse_vector.hpp"

namespace gbl {

// All greedy sets of x of order m: |A| = m and every in-set coefficient
// modulus at least every out-of-set modulus. When m exceeds the support size,
// sets are padded with zero-coefficient window indices; padding choices do
// not change the residual, so only one representative is materialized and
// `padding_classes_collapsed` is set.
struct GreedySetFamily {
  int m = 0;
  std::vector<std::vector<Index>> sets;
  bool padding_classes_collapsed = false;

  bool contains_set(const std::vector<Index>& A) const;
};

inline constexpr int kTieCap = 10000;

GreedySetFamily greedy_sets(const SparseVector& x, int m, Index window);

// T_alpha: clamps coefficient moduli above alpha to sign * alpha.
SparseVector truncate(const SparseVector& x, double alpha);

struct ReferenceErrors {
  double sigma_hat = 0;    // best prefix-of-n projection error, k <= m
  double sigma_tilde = 0;  // best |A| = m projection inside n
  double sigma_check = 0;  // best m-element consecutive n-block
  double sigma_bar = 0;    // best consecutive n-block meeting |I cap supp| <= m
};

// Exact for finitely supported x: a projection depends only on its
// intersection with supp(x), so the infima over infinite index ranges are
// attained among support intersections (plus the empty one, giving ||x||).
ReferenceErrors reference_errors(const SparseVector& x, const NormSpec& spec,
                                 const IndexSequence& n, int m);

struct ErrorProfileRow {
  int m = 0;
  double gamma = 0;
  ReferenceErrors ref;
  double ratio = 0;     // gamma / sigma_hat
  bool ratio_inf = false;
};

double gamma_m(const SparseVector& x, const NormSpec& spec, int m, Index window);

std::vector<ErrorProfileRow> tga_error_profile(const SparseVector& x, const NormSpec& spec,
                                               const IndexSequence& n, int m_max, Index window);

// CSV columns: m, gamma, sigma_hat, sigma_tilde, sigma_check, sigma_bar, ratio.
std::string profile_csv(const std::vector<ErrorProfileRow>& rows);

}  // namespace gbl
