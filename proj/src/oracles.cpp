#include "gbl/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gbl/util.hpp"

namespace gbl {
namespace oracle {

namespace {

// Largest weighted sum over all injections of the entries into weight slots
// {1, ..., k + slack}; literal enumeration, no sorting argument.
double max_injection_value(const std::vector<double>& moduli, RankWeights w, int slack) {
  const int k = static_cast<int>(moduli.size());
  if (k == 0) return 0;
  std::vector<int> slots(k + slack);
  std::iota(slots.begin(), slots.end(), 1);
  double best = 0;
  std::vector<Index> slot_ids(slots.begin(), slots.end());
  for_each_subset(slot_ids, k, [&](const std::vector<Index>& chosen) {
    if (static_cast<int>(chosen.size()) != k) return true;
    std::vector<int> perm(chosen.begin(), chosen.end());
    std::sort(perm.begin(), perm.end());
    do {
      double v = 0;
      for (int i = 0; i < k; ++i) v += rank_weight(w, perm[i]) * moduli[i];
      best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  });
  return best;
}

bool selector_matches(BlockSelector sel, const IndexSequence& seq, Index i) {
  switch (sel) {
    case BlockSelector::OnSeq: return seq.contains(i);
    case BlockSelector::OffSeq: return !seq.contains(i);
    case BlockSelector::OddPositionsOfSeq: return seq.contains(i) && seq.iota(i) % 2 == 1;
    case BlockSelector::EvenPositionsOfSeq: return seq.contains(i) && seq.iota(i) % 2 == 0;
    case BlockSelector::NotOddPositionsOfSeq:
      return !(seq.contains(i) && seq.iota(i) % 2 == 1);
    case BlockSelector::All: return true;
  }
  return false;
}

double partitioned_oracle(const SparseVector& x, const NormSpec& spec) {
  double total = 0, best = 0;
  for (const auto& b : spec.blocks) {
    std::vector<double> moduli;
    for (const auto& [i, v] : x.entries())
      if (selector_matches(b.selector, spec.seq, i)) moduli.push_back(std::abs(v));
    double val = 0;
    switch (b.mode) {
      case BlockMode::Lp: {
        double acc = 0;
        for (double m : moduli) acc += std::pow(m, b.p);
        val = b.p == 1.0 ? acc : std::pow(acc, 1.0 / b.p);
        break;
      }
      case BlockMode::Linf:
        for (double m : moduli) val = std::max(val, m);
        break;
      case BlockMode::Rearrangement: {
        // every subset, every injection into slots
        std::vector<Index> ids(moduli.size());
        std::iota(ids.begin(), ids.end(), 0);
        for_each_subset(ids, static_cast<int>(ids.size()), [&](const std::vector<Index>& F) {
          std::vector<double> sub;
          for (Index q : F) sub.push_back(moduli[q]);
          int slack = sub.size() <= 4 ? 2 : 0;
          val = std::max(val, max_injection_value(sub, b.weights, slack));
          return true;
        });
        break;
      }
    }
    total += val;
    best = std::max(best, val);
  }
  return spec.combiner == Combiner::Sum ? total : best;
}

double family_oracle(const SparseVector& x, const NormSpec& spec) {
  const auto& fp = *spec.fam;
  double total = 0;
  for (const auto& b : fp.blocks) {
    // coordinate pool: every coordinate up to 12 plus the support coordinates
    std::vector<Index> pool;
    std::vector<std::pair<long long, double>> support;  // coord -> modulus
    for (const auto& [i, v] : x.entries()) {
      if (!b.base.contains(i)) continue;
      long long coord = b.coord == FamilyCoord::Position ? b.base.iota(i) : i;
      support.push_back({coord, std::abs(v)});
    }
    for (long long c = 1; c <= 12; ++c) {
      if (b.coord == FamilyCoord::Index && !b.base.contains(c)) continue;
      pool.push_back(c);
    }
    for (const auto& [c, _] : support) pool.push_back(c);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    auto modulus_at = [&](long long c) {
      for (const auto& [cc, m] : support)
        if (cc == c) return m;
      return 0.0;
    };
    auto pred_value = [&](long long c) {
      if (b.predicate == FamilyPredicate::SqrtCoord) return c;
      return std::max<long long>(1, b.phi_breaks->count_below(c));
    };
    long long cap_max = 0;
    for (long long c : pool) cap_max = std::max(cap_max, isqrt_floor(pred_value(c)));
    if (pool.size() > 24 || cap_max > 6)
      throw FeasibilityError("family oracle: coordinate pool too large");

    double best = 0;
    for_each_subset(pool, static_cast<int>(cap_max), [&](const std::vector<Index>& F) {
      if (F.empty()) return true;
      long long mn = F.front();
      if (static_cast<long long>(F.size()) * static_cast<long long>(F.size()) >
          pred_value(mn))
        return true;  // predicate fails
      std::vector<double> moduli;
      for (long long c : F) moduli.push_back(modulus_at(c));
      if (b.weights == RankWeights::Unit) {
        double v = 0;
        for (double m : moduli) v += m;
        best = std::max(best, v);
      } else {
        int slack = moduli.size() <= 3 ? 1 : 0;
        best = std::max(best, max_injection_value(moduli, b.weights, slack));
      }
      return true;
    });
    total += best;
  }
  switch (fp.tail) {
    case FamilyTail::None:
      break;
    case FamilyTail::L1OffBases: {
      for (const auto& [i, v] : x.entries()) {
        bool in_base = false;
        for (const auto& b : fp.blocks) in_base = in_base || b.base.contains(i);
        if (!in_base) total += std::abs(v);
      }
      break;
    }
    case FamilyTail::L2Global: {
      double acc = 0;
      for (const auto& [_, v] : x.entries()) acc += v * v;
      total += std::sqrt(acc);
      break;
    }
  }
  return total;
}

double lambda_oracle(const SparseVector& x, const NormSpec& spec) {
  if (x.support_size() > 6)
    throw FeasibilityError("lambda oracle: support too large");
  const auto& l = *spec.lam;
  std::vector<Index> nprime;
  for (int k : l.nprime_positions) nprime.push_back(spec.seq.nth(k));

  std::vector<Index> pool = x.support();
  // one padding index outside n' exercises the general-weight regime
  for (Index i = 1;; ++i)
    if (!contains_index(nprime, i) && x.coeff(i) == 0.0) {
      pool.push_back(i);
      break;
    }
  std::sort(pool.begin(), pool.end());

  double best = 0;
  for_each_subset(pool, static_cast<int>(pool.size()), [&](const std::vector<Index>& F) {
    if (F.empty()) return true;
    bool inside = true;
    for (Index i : F) inside = inside && contains_index(nprime, i);
    std::vector<double> moduli;
    for (Index i : F) moduli.push_back(std::abs(x.coeff(i)));
    best = std::max(best,
                    max_injection_value(moduli, inside ? RankWeights::InvSqrt : RankWeights::Inv,
                                        0));
    return true;
  });
  return best;
}

}  // namespace

bool covers(const NormSpec& spec) {
  switch (spec.family) {
    case NormFamily::Partitioned:
    case NormFamily::FamilyWeight:
    case NormFamily::LambdaWeight:
      return true;
    default:
      return false;
  }
}

double norm(const SparseVector& x, const NormSpec& spec) {
  if (x.support_size() > 8) throw FeasibilityError("oracle: support too large");
  switch (spec.family) {
    case NormFamily::Partitioned:
      return partitioned_oracle(x, spec);
    case NormFamily::FamilyWeight:
      return family_oracle(x, spec);
    case NormFamily::LambdaWeight:
      return lambda_oracle(x, spec);
    default:
      throw std::invalid_argument("oracle: family not covered");
  }
}

std::vector<std::vector<Index>> greedy_sets(const SparseVector& x, int m, Index window) {
  std::vector<Index> universe;
  for (Index i = 1; i <= window; ++i) universe.push_back(i);
  std::vector<std::vector<Index>> out;
  for_each_subset(universe, m, [&](const std::vector<Index>& A) {
    if (static_cast<int>(A.size()) != m) return true;
    double min_in = 1e300;
    for (Index i : A) min_in = std::min(min_in, std::abs(x.coeff(i)));
    double max_out = 0;
    for (const auto& [i, v] : x.entries())
      if (!contains_index(A, i)) max_out = std::max(max_out, std::abs(v));
    if (min_in >= max_out) out.push_back(A);
    return true;
  });
  return out;
}

}  // namespace oracle
}  // namespace gbl
