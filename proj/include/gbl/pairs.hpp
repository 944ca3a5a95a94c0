#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbl/index_sequence.hpp"
#include "gbl/util.hpp"
#include "gbl/weight.hpp"

namespace gbl {

// Admissible-pair classes. TN: A in n, |A| <= |B|, A < B cap n. SN drops the
// order condition. TNS inserts an order gap n_s, s from a gap sequence.
// TOmegaN replaces cardinality by a set weight. Lambda adds the enlarged-sum
// size condition (lambda-1)*iota(max A) + |A| <= |B| on top of TN.
enum class PairClass { TN, SN, TNS, TOmegaN, Lambda };

std::string pair_class_name(PairClass c);

struct ClassContext {
  IndexSequence n = IndexSequence::evens();
  std::optional<IndexSequence> s;   // gap order sequence, for TNS
  std::optional<Weight> omega;      // set weight, for TOmegaN
  std::optional<double> lambda;     // > 1, for Lambda
};

struct AdmissiblePair {
  std::vector<Index> A, B;
  std::set<PairClass> classes;

  bool in(PairClass c) const { return classes.count(c) > 0; }
};

// Tags (A, B) with every class whose defining conditions hold. Vacuous
// comparisons (empty set, or B cap n empty) resolve to true.
AdmissiblePair classify_pair(const std::vector<Index>& A, const std::vector<Index>& B,
                             const ClassContext& ctx);

// Estimated number of (A, B) pairs for the guard below.
long double estimate_pair_count(const ClassContext& ctx, Index window, int size_cap);

// Every pair (A, B) with A a subset of n cap [1, window], B a subset of
// [1, window], |A|, |B| <= size_cap, in the requested class. Deterministic
// lexicographic order on (|A|, A, |B|, B). Throws FeasibilityError when the
// estimated pair count exceeds 1e8.
void enumerate_pairs(const ClassContext& ctx, Index window, int size_cap, PairClass cls,
                     const std::function<void(const AdmissiblePair&)>& visit);

}  // namespace gbl
