#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbl/index_sequence.hpp"
#include "gbl/util.hpp"

namespace gbl {

// Weight sequences used by rearrangement and family blocks. All are positive
// and non-increasing, which is what makes the sorted-pairing reduction exact.
enum class RankWeights { Unit, InvSqrt, Inv };

double rank_weight(RankWeights w, int rank);  // rank is 1-based

// ---------------------------------------------------------------------------
// Partitioned family: disjoint index-selector blocks, each evaluated as lp,
// linf, or a rearrangement supremum, combined by sum or max. A combiner-max
// spec may add one overlapping global linf block.
// ---------------------------------------------------------------------------

enum class BlockSelector {
  OnSeq,               // indices in the primary sequence
  OffSeq,              // indices outside it
  OddPositionsOfSeq,   // n_1, n_3, ... (positions, not index parity)
  EvenPositionsOfSeq,  // n_2, n_4, ...
  NotOddPositionsOfSeq,
  All
};

enum class BlockMode { Lp, Linf, Rearrangement };

struct PartitionBlock {
  BlockSelector selector = BlockSelector::All;
  BlockMode mode = BlockMode::Lp;
  double p = 1.0;
  RankWeights weights = RankWeights::Unit;
};

enum class Combiner { Sum, Max };

// ---------------------------------------------------------------------------
// Family-weight family: one or more independent blocks, each a supremum over
// admissible finite sets F of weighted coefficient sums taken inside a base
// sequence, plus a tail term. Admissibility caps |F| by sqrt of either the
// smallest coordinate of F or phi(smallest coordinate), phi counting the
// breakpoints below it.
// ---------------------------------------------------------------------------

enum class FamilyCoord { Position, Index };
enum class FamilyPredicate { SqrtCoord, SqrtPhi };
enum class FamilyTail { None, L1OffBases, L2Global };

struct FamilyBlock {
  IndexSequence base = IndexSequence::evens();
  FamilyCoord coord = FamilyCoord::Position;
  FamilyPredicate predicate = FamilyPredicate::SqrtCoord;
  std::optional<IndexSequence> phi_breaks;  // required for SqrtPhi
  RankWeights weights = RankWeights::InvSqrt;
};

struct FamilyParams {
  std::vector<FamilyBlock> blocks;
  FamilyTail tail = FamilyTail::L1OffBases;
};

// ---------------------------------------------------------------------------
// Gap families (order-bounded partial sums / lp blocks along a gap sequence).
// ---------------------------------------------------------------------------

struct GapOrderParams {
  std::vector<long long> s;   // the gap sequence, materialized
  std::vector<int> kj;        // 1-based indices of the selected subsequence
  Index window = 0;           // declared index window
};

struct GapExpParams {
  std::vector<long long> s;
  std::vector<double> p;      // exponents, decreasing toward 1; same length as s
  Index window = 0;
};

struct LambdaParams {
  double lambda = 2.0;
  std::vector<int> nprime_positions;  // positions k_j of n' inside n
};

enum class NormFamily { Partitioned, FamilyWeight, Summing, Split, GapOrder, GapExp, LambdaWeight };

std::string family_name(NormFamily f);

struct NormSpec {
  std::string id;
  std::string label;  // short human description
  NormFamily family = NormFamily::Partitioned;
  IndexSequence seq = IndexSequence::evens();  // the sequence the formula is built on

  std::vector<PartitionBlock> blocks;  // Partitioned
  Combiner combiner = Combiner::Sum;

  std::optional<FamilyParams> fam;        // FamilyWeight
  std::optional<GapOrderParams> gap_ord;  // GapOrder
  std::optional<GapExpParams> gap_exp;    // GapExp
  std::optional<LambdaParams> lam;        // LambdaWeight

  bool one_unconditional = true;
  bool one_pslc_expected = false;
  bool normalized = true;

  // Fails fast when configured subsequences violate their growth conditions.
  void validate() const;

  nlohmann::json to_json() const;
  static NormSpec from_json(const nlohmann::json& j);
};

// Maximizing structure behind a norm value: which term attained the max, the
// participating indices, and their weight ranks where applicable.
struct NormWitness {
  std::string term;
  std::vector<Index> indices;
  std::vector<int> ranks;
  std::string note;

  nlohmann::json to_json() const;
};

struct NormValue {
  double value = 0.0;
  NormWitness witness;
  bool window_warning = false;
};

}  // namespace gbl
