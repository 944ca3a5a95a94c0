#include "gbl/catalog.hpp"

namespace gbl {

IndexSequence m_aux_sequence() {
  std::vector<Index> v{1};
  for (Index k = 4; k <= 4096; k += 4) v.push_back(k);
  return IndexSequence::list(v);
}

IndexSequence d_aux_sequence() { return IndexSequence::arithmetic(2, 4); }

namespace {

NormSpec partitioned(std::string id, std::string label, IndexSequence seq,
                     std::vector<PartitionBlock> blocks, Combiner comb) {
  NormSpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.family = NormFamily::Partitioned;
  s.seq = std::move(seq);
  s.blocks = std::move(blocks);
  s.combiner = comb;
  return s;
}

std::map<std::string, CatalogEntry> build() {
  std::map<std::string, CatalogEntry> cat;
  const IndexSequence evens = IndexSequence::evens();
  const IndexSequence naturals = IndexSequence::naturals();

  {
    CatalogEntry e;
    e.spec = partitioned("l1", "plain l1 over all indices", naturals,
                         {{BlockSelector::All, BlockMode::Lp, 1.0, RankWeights::Unit}},
                         Combiner::Sum);
    e.spec.one_pslc_expected = true;
    e.ctx_n = naturals;
    e.default_window = 20;
    e.kappa_exact = 1.0;
    cat["l1"] = e;
  }
  {
    CatalogEntry e;
    e.spec = partitioned("linf", "sup of coefficient moduli", naturals,
                         {{BlockSelector::All, BlockMode::Linf, 1.0, RankWeights::Unit}},
                         Combiner::Max);
    e.ctx_n = naturals;
    e.default_window = 20;
    e.kappa_exact = 1.0;
    cat["linf"] = e;
  }
  {
    // l1 on the complement plus l2 on the sequence, summed.
    CatalogEntry e;
    e.spec = partitioned("l1l2", "l1 off the sequence + l2 on it", evens,
                         {{BlockSelector::OffSeq, BlockMode::Lp, 1.0, RankWeights::Unit},
                          {BlockSelector::OnSeq, BlockMode::Lp, 2.0, RankWeights::Unit}},
                         Combiner::Sum);
    e.spec.one_pslc_expected = true;
    e.default_window = 20;
    e.kappa_exact = 1.0;
    cat["l1l2"] = e;
  }
  {
    // Rearranged 1/sqrt weights on the sequence, l1 off it.
    CatalogEntry e;
    e.spec = partitioned(
        "wrearr", "weighted rearrangement on the sequence + l1 off it", evens,
        {{BlockSelector::OnSeq, BlockMode::Rearrangement, 1.0, RankWeights::InvSqrt},
         {BlockSelector::OffSeq, BlockMode::Lp, 1.0, RankWeights::Unit}},
        Combiner::Sum);
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["wrearr"] = e;
  }
  {
    // Family supremum with the sqrt(min position) cardinality cap.
    CatalogEntry e;
    NormSpec s;
    s.id = "capfam";
    s.label = "capped-family rearrangement on the sequence + l1 off it";
    s.family = NormFamily::FamilyWeight;
    s.seq = evens;
    FamilyParams fp;
    fp.blocks.push_back({evens, FamilyCoord::Position, FamilyPredicate::SqrtCoord,
                         std::nullopt, RankWeights::InvSqrt});
    fp.tail = FamilyTail::L1OffBases;
    s.fam = fp;
    s.one_pslc_expected = true;
    e.spec = s;
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["capfam"] = e;
  }
  {
    // Two capped-family blocks over the companion pair (m, d), l1 elsewhere.
    CatalogEntry e;
    NormSpec s;
    s.id = "twofam";
    s.label = "two capped-family blocks over a companion sequence pair";
    s.family = NormFamily::FamilyWeight;
    s.seq = evens;
    FamilyParams fp;
    fp.blocks.push_back({m_aux_sequence(), FamilyCoord::Position, FamilyPredicate::SqrtCoord,
                         std::nullopt, RankWeights::InvSqrt});
    fp.blocks.push_back({d_aux_sequence(), FamilyCoord::Position, FamilyPredicate::SqrtCoord,
                         std::nullopt, RankWeights::InvSqrt});
    fp.tail = FamilyTail::L1OffBases;
    s.fam = fp;
    e.spec = s;
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["twofam"] = e;
  }
  {
    // Sup of forward partial sums along the sequence plus sup off it.
    CatalogEntry e;
    NormSpec s;
    s.id = "summing";
    s.label = "summing-basis norm along the sequence";
    s.family = NormFamily::Summing;
    s.seq = evens;
    s.one_unconditional = false;
    e.spec = s;
    e.default_window = 28;
    e.kappa_exact = 2.0;
    cat["summing"] = e;
  }
  {
    // max{ l1 on odd positions, sup off the sequence, sup on even positions }.
    CatalogEntry e;
    NormSpec s;
    s.id = "split";
    s.label = "l1 on odd positions vs sup elsewhere";
    s.family = NormFamily::Split;
    s.seq = evens;
    e.spec = s;
    e.default_window = 56;
    e.kappa_exact = 1.0;
    cat["split"] = e;
  }
  {
    // Unit-weight family with the sqrt(phi(min index)) cap, phi stepping at
    // the d-sequence, l1 off the sequence.
    CatalogEntry e;
    NormSpec s;
    s.id = "phifam";
    s.label = "phi-capped unit family inside the sequence";
    s.family = NormFamily::FamilyWeight;
    s.seq = evens;
    FamilyParams fp;
    fp.blocks.push_back({evens, FamilyCoord::Index, FamilyPredicate::SqrtPhi, d_aux_sequence(),
                         RankWeights::Unit});
    fp.tail = FamilyTail::L1OffBases;
    s.fam = fp;
    s.one_pslc_expected = true;
    e.spec = s;
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["phifam"] = e;
  }
  {
    // Unit-weight phi-capped family over every index plus a global l2 term;
    // phi steps at the odd numbers. Semi-normalized (||e_k|| = 2).
    CatalogEntry e;
    NormSpec s;
    s.id = "phil2";
    s.label = "phi-capped unit family over all indices + global l2";
    s.family = NormFamily::FamilyWeight;
    s.seq = evens;
    FamilyParams fp;
    fp.blocks.push_back({naturals, FamilyCoord::Index, FamilyPredicate::SqrtPhi,
                         IndexSequence::arithmetic(1, 2), RankWeights::Unit});
    fp.tail = FamilyTail::L2Global;
    s.fam = fp;
    s.normalized = false;
    e.spec = s;
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["phil2"] = e;
  }
  {
    // max{ linf, weighted rearrangement on the sequence, l1 off it }.
    CatalogEntry e;
    e.spec = partitioned(
        "maxrearr", "max of linf, on-sequence rearrangement, off-sequence l1", evens,
        {{BlockSelector::OnSeq, BlockMode::Rearrangement, 1.0, RankWeights::InvSqrt},
         {BlockSelector::OffSeq, BlockMode::Lp, 1.0, RankWeights::Unit},
         {BlockSelector::All, BlockMode::Linf, 1.0, RankWeights::Unit}},
        Combiner::Max);
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["maxrearr"] = e;
  }
  {
    // 1/sqrt rearrangement on odd positions + 1/i rearrangement elsewhere.
    CatalogEntry e;
    e.spec = partitioned(
        "twospeed", "two-speed rearrangement split at odd positions", evens,
        {{BlockSelector::OddPositionsOfSeq, BlockMode::Rearrangement, 1.0, RankWeights::InvSqrt},
         {BlockSelector::NotOddPositionsOfSeq, BlockMode::Rearrangement, 1.0, RankWeights::Inv}},
        Combiner::Sum);
    e.default_window = 24;
    e.kappa_exact = 1.0;
    cat["twospeed"] = e;
  }
  {
    // Order-capped set sums plus scale-selected partial sums.
    CatalogEntry e;
    NormSpec s;
    s.id = "gap_order";
    s.label = "order-admissible set sums with quotient-gap scales";
    s.family = NormFamily::GapOrder;
    s.seq = evens;
    GapOrderParams g;
    g.s = {1, 7, 64, 769};
    g.kj = {1, 2, 3};
    g.window = 2048;
    s.gap_ord = g;
    s.one_unconditional = false;
    e.spec = s;
    e.default_window = 84;
    cat["gap_order"] = e;
  }
  {
    // Variable-exponent order blocks with additive-gap scales.
    CatalogEntry e;
    NormSpec s;
    s.id = "gap_exp";
    s.label = "variable-exponent order blocks with additive-gap scales";
    s.family = NormFamily::GapExp;
    s.seq = evens;
    GapExpParams g;
    g.s = {1, 32, 333, 3334};
    g.p = {2.0, 1.5, 1.25, 1.125};
    g.window = 1024;
    s.gap_exp = g;
    e.spec = s;
    e.default_window = 80;
    e.kappa_exact = 1.0;
    cat["gap_exp"] = e;
  }
  {
    // Set-dependent weight speeds: 1/sqrt inside the sparse subsequence n',
    // 1/i otherwise.
    CatalogEntry e;
    NormSpec s;
    s.id = "lambda";
    s.label = "set-dependent rearrangement speeds around a sparse subsequence";
    s.family = NormFamily::LambdaWeight;
    s.seq = evens;
    LambdaParams l;
    l.lambda = 2.0;
    l.nprime_positions = {8, 17, 32, 55, 88};
    s.lam = l;
    e.spec = s;
    e.default_window = 200;
    e.kappa_exact = 1.0;
    cat["lambda"] = e;
  }
  {
    // Summing norm over the interleaved enumeration m = N; the greedy context
    // keeps n = evens, so prefix projections along n hit alternating blocks.
    CatalogEntry e;
    NormSpec s;
    s.id = "interleave";
    s.label = "summing norm over the interleaved pair enumeration";
    s.family = NormFamily::Summing;
    s.seq = naturals;
    s.one_unconditional = false;
    e.spec = s;
    e.ctx_n = evens;
    e.default_window = 24;
    e.kappa_exact = 2.0;
    cat["interleave"] = e;
  }

  for (auto& [id, e] : cat) e.spec.validate();
  return cat;
}

}  // namespace

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> cat = build();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  const auto& cat = catalog();
  auto it = cat.find(id);
  if (it == cat.end()) throw std::invalid_argument("unknown norm '" + id + "'");
  return it->second;
}

}  // namespace gbl
