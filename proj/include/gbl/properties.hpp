#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbl/catalog.hpp"
#include "gbl/norm_eval.hpp"
#include "gbl/pairs.hpp"
#include "gbl/weight.hpp"

namespace gbl {

// Pointwise unit-constant symmetry conditions, checked over a deterministic
// sample library. PSLC: adding a unit never shrinks the norm and a left unit
// inside the sequence never beats a disjoint unit further out. SLC drops the
// order condition. RSLC restricts it below min A. AG: the first greedy
// residual never beats a coordinate removal inside the sequence.
enum class SymmetryVariant { PSLC_p10, SLC_ee10, RSLC, AG_ee13 };

std::string symmetry_variant_name(SymmetryVariant v);

struct SampleConfig {
  Index window = 24;
  int max_support = 5;
  int random_supports = 250;
  std::uint64_t seed = kSampleSeed;
};

struct SymmetryReport {
  bool pass = true;
  std::string detail;       // counterexample description when failing
  double lhs = 0, rhs = 0;  // violating values
};

SymmetryReport check_unit_symmetry(const NormSpec& spec, const IndexSequence& n,
                                   SymmetryVariant variant, const SampleConfig& cfg);

struct DivergenceRow {
  long long N = 0;
  double num = 0, den = 0, ratio = 0;
  double certified = 0;  // per-N certified lower bound for the ratio
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;
  bool growth_ok = false;  // ratio at largest N >= 2x ratio at smallest N
  double growth_factor = 0;
};

// Witness families: "m2_off_vs_on" (off-sequence block vs later on-sequence
// block), "m3_first_vs_far" (first N positions vs N positions past N^2),
// "l1_control" (negative control, ratios stay at 1).
DivergenceReport divergence_report(const NormSpec& spec, const IndexSequence& n,
                                   const std::string& family_id,
                                   const std::vector<long long>& N_list);

struct NSchauderReport {
  double best_ratio = 0;      // sup ||P^n_m x|| / ||x|| over the probe library
  double schauder_best = 0;   // sup ||P_{1..k} x|| / ||x|| (plain basis direction)
  SparseVector witness;
  int witness_m = 0;
  std::vector<double> pattern_ratios;  // alternating-pattern ratios, index = n
};

NSchauderReport n_schauder_constant(const NormSpec& spec, const IndexSequence& n, Index window,
                                    const SampleConfig& cfg);

struct C0ProbeReport {
  std::vector<std::pair<int, double>> values;  // (k, max over signs of ||1_{eps A_k}||)
  std::string verdict;                         // "bounded" or "growing" (window heuristic)
};

C0ProbeReport c0_subsequence_probe(const NormSpec& spec, const IndexSequence& candidate,
                                   const std::vector<int>& sizes);

struct GapProfile {
  double quotient_bound = 0;
  long long additive_bound = 0;
  bool quotient_unbounded = false;
  bool additive_unbounded = false;
  std::pair<Index, Index> quotient_at{0, 0}, additive_at{0, 0};
};

GapProfile gap_classifier(const IndexSequence& s, Index window);

struct RightSkewRow {
  std::vector<Index> A, B;
  double ratio = 0;  // best found ||1_B|| / ||1_A||
};

struct RightSkewReport {
  bool pass = true;
  double worst_ratio = 0;
  std::vector<RightSkewRow> rows;
};

RightSkewReport right_skewed_probe(const NormSpec& spec, Index window, int size_cap,
                                   double c_target);

std::pair<bool, AdmissiblePair> weight_admissibility(const Weight& omega, const IndexSequence& n,
                                                     const std::vector<Index>& A,
                                                     const std::vector<Index>& B);

// Norm-induced set weight: omega(A) = ||1_A||.
Weight norm_induced_weight(const NormSpec& spec);

// Window realization of limsup s_n: max over the last half of the window.
double window_limsup(const std::vector<double>& values);

// Deterministic sample vectors shared by the property checks.
std::vector<SparseVector> sample_vectors(const IndexSequence& n, const SampleConfig& cfg);

}  // namespace gbl
