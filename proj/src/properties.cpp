#include "gbl/properties.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gbl/greedy.hpp"
#include "gbl/sign_pattern.hpp"

namespace gbl {

std::string symmetry_variant_name(SymmetryVariant v) {
  switch (v) {
    case SymmetryVariant::PSLC_p10: return "PSLC_p10";
    case SymmetryVariant::SLC_ee10: return "SLC_ee10";
    case SymmetryVariant::RSLC: return "RSLC";
    case SymmetryVariant::AG_ee13: return "AG_ee13";
  }
  return "?";
}

namespace {
constexpr double kTol = 1e-9;

const double kLevels[] = {0.25, 0.5, 1.0};
}  // namespace

std::vector<SparseVector> sample_vectors(const IndexSequence& n, const SampleConfig& cfg) {
  std::vector<SparseVector> out;
  for (Index i = 1; i <= cfg.window; ++i) out.push_back(indicator({i}));
  for (Index i = 1; i <= cfg.window; ++i)
    for (Index j = i + 1; j <= cfg.window; ++j) out.push_back(indicator({i, j}));
  SplitMix64 rng(cfg.seed);
  for (int q = 0; q < cfg.random_supports; ++q) {
    int size = 3 + static_cast<int>(rng.below(std::max(1, cfg.max_support - 2)));
    std::set<Index> supp;
    while (static_cast<int>(supp.size()) < size)
      supp.insert(1 + static_cast<Index>(rng.below(cfg.window)));
    SparseVector x;
    for (Index i : supp) {
      double level = kLevels[rng.below(3)];
      x.set(i, rng.below(2) ? level : -level);
    }
    out.push_back(x);
  }
  // a cancellation-heavy shape that separates greedy residuals from
  // coordinate removals on summing-type norms
  if (n.has_at_least(5)) {
    SparseVector x;
    x.set(n.nth(1), 1.0);
    x.set(n.nth(2), 0.5);
    x.set(n.nth(3), -1.0);
    x.set(n.nth(4), 0.5);
    x.set(n.nth(5), 0.5);
    out.push_back(x);
  }
  return out;
}

SymmetryReport check_unit_symmetry(const NormSpec& spec, const IndexSequence& n,
                                   SymmetryVariant variant, const SampleConfig& cfg) {
  SymmetryReport rep;
  auto samples = sample_vectors(n, cfg);
  std::vector<Index> n_window = n.elements_up_to(cfg.window);

  auto fail = [&](double lhs, double rhs, const std::string& detail) {
    rep.pass = false;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.detail = detail;
  };

  for (const auto& x : samples) {
    if (x.linf() > 1.0 + 1e-12) continue;
    const std::vector<Index> supp = x.support();
    const double base = norm_of(x, spec);

    if (variant == SymmetryVariant::PSLC_p10 || variant == SymmetryVariant::SLC_ee10) {
      // unit extension never shrinks the norm
      for (Index k = 1; k <= cfg.window; ++k) {
        if (x.coeff(k) != 0.0) continue;
        SparseVector y = x;
        y.set(k, 1.0);
        double v = norm_of(y, spec);
        if (base > v + kTol)
          return (fail(base, v, "||x|| > ||x+e_k|| at k=" + std::to_string(k) +
                                    ", x=" + x.to_string()),
                  rep);
      }
    }

    if (variant == SymmetryVariant::PSLC_p10 || variant == SymmetryVariant::SLC_ee10) {
      // left-unit vs free-unit comparison
      for (Index j : n_window) {
        if (x.coeff(j) != 0.0) continue;
        for (Index k = 1; k <= cfg.window; ++k) {
          if (k == j || x.coeff(k) != 0.0) continue;
          if (variant == SymmetryVariant::PSLC_p10) {
            // j < ({k} u supp(x)) cap n
            bool ok = true;
            if (n.contains(k) && j >= k) ok = false;
            for (Index i : supp)
              if (n.contains(i) && j >= i) ok = false;
            if (!ok) continue;
          }
          for (int s : {1, -1}) {
            SparseVector yl = x;
            yl.set(j, s);
            double lhs = norm_of(yl, spec);
            for (int t : {1, -1}) {
              SparseVector yr = x;
              yr.set(k, t);
              double rhs = norm_of(yr, spec);
              if (lhs > rhs + kTol)
                return (fail(lhs, rhs,
                             "||x+se_j|| > ||x+te_k|| at j=" + std::to_string(j) +
                                 " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                 " t=" + std::to_string(t) + ", x=" + x.to_string()),
                        rep);
            }
          }
        }
      }
    }

    if (variant == SymmetryVariant::RSLC) {
      // signed indicator pairs with the below-min-A restriction
      for (int asize = 1; asize <= 2; ++asize) {
        for_each_subset(n_window, asize, [&](const std::vector<Index>& A) {
          if (static_cast<int>(A.size()) != asize) return true;
          if (!sets_disjoint(A, supp)) return true;
          std::vector<Index> b_universe;
          for (Index i = 1; i <= cfg.window; ++i)
            if (x.coeff(i) == 0.0 && !contains_index(A, i)) b_universe.push_back(i);
          bool keep_going = true;
          for_each_subset(b_universe, asize, [&](const std::vector<Index>& B) {
            if (B.size() < A.size()) return true;
            // A < ((supp u B) cap n)|_{min A}
            for (Index i : set_union(supp, B))
              if (n.contains(i) && i >= A.front() && i <= A.back()) return true;
            for (int es : {1, -1})
              for (int ds : {1, -1}) {
                SparseVector ya = x, yb = x;
                for (Index a : A) ya.set(a, es);
                for (Index b : B) yb.set(b, ds);
                double lhs = norm_of(ya, spec), rhs = norm_of(yb, spec);
                if (lhs > rhs + kTol) {
                  fail(lhs, rhs, "RSLC violation, A/B signed indicators, x=" + x.to_string());
                  keep_going = false;
                  return false;
                }
              }
            return true;
          });
          return keep_going;
        });
        if (!rep.pass) return rep;
      }
    }

    if (variant == SymmetryVariant::AG_ee13) {
      if (supp.empty()) continue;
      GreedySetFamily fam;
      try {
        fam = greedy_sets(x, 1, cfg.window);
      } catch (const TieOverflowError&) {
        continue;
      }
      double lhs = 0;
      for (const auto& A : fam.sets)
        lhs = std::max(lhs, norm_of(x.restricted_complement(A), spec));
      for (Index j : n_window) {
        SparseVector y = x.restricted_complement({j});
        double rhs = norm_of(y, spec);
        if (lhs > rhs + kTol)
          return (fail(lhs, rhs,
                       "greedy residual beats removal at j=" + std::to_string(j) +
                           ", x=" + x.to_string()),
                  rep);
      }
    }
  }
  return rep;
}

DivergenceReport divergence_report(const NormSpec& spec, const IndexSequence& n,
                                   const std::string& family_id,
                                   const std::vector<long long>& N_list) {
  DivergenceReport rep;
  for (long long N : N_list) {
    DivergenceRow row;
    row.N = N;
    if (family_id == "m2_off_vs_on") {
      // N indices off the sequence vs N sequence indices further right
      std::vector<Index> D, E;
      Index i = 1;
      while (static_cast<long long>(D.size()) < N) {
        if (!n.contains(i)) D.push_back(i);
        ++i;
      }
      int start = n.count_up_to(D.back());
      for (int q = 1; q <= N; ++q) E.push_back(n.nth(start + q));
      row.num = norm_of(indicator(D), spec);
      row.den = norm_of(indicator(E), spec);
      row.certified = std::sqrt(static_cast<double>(N)) / 2.0;
    } else if (family_id == "m3_first_vs_far") {
      std::vector<Index> E, F;
      for (int q = 1; q <= N; ++q) E.push_back(n.nth(q));
      for (long long q = 1; q <= N; ++q)
        F.push_back(n.nth(static_cast<int>(N * N + q)));
      row.num = norm_of(indicator(F), spec);
      row.den = norm_of(indicator(E), spec);
      row.certified = (std::sqrt(static_cast<double>(N + 1)) - 1.0) /
                      std::pow(static_cast<double>(N), 0.25);
    } else if (family_id == "l1_control") {
      std::vector<Index> D, E;
      Index i = 1;
      while (static_cast<long long>(D.size()) < N) {
        if (!n.contains(i)) D.push_back(i);
        ++i;
      }
      for (int q = 1; q <= N; ++q) E.push_back(n.nth(q));
      row.num = norm_of(indicator(D), spec);
      row.den = norm_of(indicator(E), spec);
      row.certified = 1.0;
    } else {
      throw std::invalid_argument("divergence_report: unknown family " + family_id);
    }
    row.ratio = row.den > 0 ? row.num / row.den : 0;
    rep.rows.push_back(row);
  }
  if (!rep.rows.empty() && rep.rows.front().ratio > 0) {
    rep.growth_factor = rep.rows.back().ratio / rep.rows.front().ratio;
    rep.growth_ok = rep.growth_factor >= 2.0;
  }
  return rep;
}

NSchauderReport n_schauder_constant(const NormSpec& spec, const IndexSequence& n, Index window,
                                    const SampleConfig& cfg) {
  NSchauderReport rep;
  std::vector<SparseVector> probes;

  // alternating patterns over the norm's own sequence
  for (int t = 1; t <= 8; ++t) {
    SparseVector x;
    for (int i = 1; i <= 2 * t; ++i) x.set(spec.seq.nth(i), i % 2 == 0 ? 1.0 : -1.0);
    probes.push_back(x);
  }
  const std::size_t pattern_count = probes.size();
  SampleConfig sc = cfg;
  sc.window = window;
  for (auto& x : sample_vectors(n, sc)) probes.push_back(x);

  rep.pattern_ratios.assign(pattern_count, 0.0);
  for (std::size_t q = 0; q < probes.size(); ++q) {
    const SparseVector& x = probes[q];
    double full = norm_of(x, spec);
    if (full <= 0) continue;
    int last_pos = 0;
    for (const auto& [i, _] : x.entries())
      if (n.contains(i)) last_pos = std::max(last_pos, n.iota(i));
    double best = 0;
    int best_m = 0;
    for (int m = 1; m <= last_pos; ++m) {
      double v = norm_of(prefix_project(x, n, m), spec) / full;
      if (v > best) {
        best = v;
        best_m = m;
      }
    }
    if (q < pattern_count) rep.pattern_ratios[q] = best;
    if (best > rep.best_ratio) {
      rep.best_ratio = best;
      rep.witness = x;
      rep.witness_m = best_m;
    }
    Index last_idx = x.max_index();
    for (Index k = 1; k <= last_idx; ++k) {
      std::vector<Index> prefix;
      for (Index i = 1; i <= k; ++i) prefix.push_back(i);
      rep.schauder_best =
          std::max(rep.schauder_best, norm_of(x.restricted(prefix), spec) / full);
    }
  }
  return rep;
}

C0ProbeReport c0_subsequence_probe(const NormSpec& spec, const IndexSequence& candidate,
                                   const std::vector<int>& sizes) {
  C0ProbeReport rep;
  const bool collapse = formula_unconditional(spec);
  for (int k : sizes) {
    std::vector<Index> A = candidate.prefix(k);
    double best = 0;
    if (collapse) {
      best = norm_of(indicator(A), spec);
    } else {
      // sign panel: uniform and alternating patterns
      for (int first : {1, -1}) {
        best = std::max(best, norm_of(indicator(A, SignPattern::alternating(A, first)), spec));
        SparseVector u;
        for (Index i : A) u.set(i, first);
        best = std::max(best, norm_of(u, spec));
      }
    }
    rep.values.push_back({k, best});
  }
  double first = rep.values.front().second, last = rep.values.back().second;
  rep.verdict = (last <= first * 1.01) ? "bounded" : "growing";
  return rep;
}

GapProfile gap_classifier(const IndexSequence& s, Index window) {
  std::vector<Index> el = s.elements_up_to(window);
  if (el.size() < 2) throw std::invalid_argument("gap_classifier: need at least 2 elements");
  GapProfile p;
  bool quot_nondec = true, add_nondec = true;
  double prev_q = 0;
  long long prev_d = 0;
  for (std::size_t i = 1; i < el.size(); ++i) {
    double q = static_cast<double>(el[i]) / static_cast<double>(el[i - 1]);
    long long d = el[i] - el[i - 1];
    if (q > p.quotient_bound) {
      p.quotient_bound = q;
      p.quotient_at = {el[i - 1], el[i]};
    }
    if (d > p.additive_bound) {
      p.additive_bound = d;
      p.additive_at = {el[i - 1], el[i]};
    }
    if (i >= 2) {
      if (q < prev_q - 1e-12) quot_nondec = false;
      if (d < prev_d) add_nondec = false;
    }
    prev_q = q;
    prev_d = d;
  }
  if (s.kind() == IndexSequence::Kind::Arithmetic) {
    // additive gaps exactly the step; quotient sup attained at the first pair
    p.additive_unbounded = false;
    p.quotient_unbounded = false;
  } else {
    double first_q = static_cast<double>(el[1]) / static_cast<double>(el[0]);
    long long first_d = el[1] - el[0];
    p.quotient_unbounded = quot_nondec && p.quotient_bound > first_q + 1e-12;
    p.additive_unbounded = add_nondec && p.additive_bound > first_d;
  }
  return p;
}

RightSkewReport right_skewed_probe(const NormSpec& spec, Index window, int size_cap,
                                   double c_target) {
  RightSkewReport rep;
  std::vector<Index> a_universe;
  for (Index i = 1; i <= window / 2; ++i) a_universe.push_back(i);

  // index classes used to build right candidates
  std::vector<Index> nprime;
  if (spec.lam)
    for (int k : spec.lam->nprime_positions) nprime.push_back(spec.seq.nth(k));

  for_each_subset(a_universe, size_cap, [&](const std::vector<Index>& A) {
    if (A.empty()) return true;
    double na = norm_of(indicator(A), spec);
    if (na <= 0) return true;
    const int k = static_cast<int>(A.size());
    const Index lo = A.back();

    std::vector<std::vector<Index>> candidates;
    auto collect = [&](auto pred) {
      std::vector<Index> pool;
      for (Index i = lo + 1; i <= window; ++i)
        if (pred(i)) pool.push_back(i);
      if (static_cast<int>(pool.size()) >= k) {
        candidates.emplace_back(pool.begin(), pool.begin() + k);
        candidates.emplace_back(pool.end() - k, pool.end());
      }
    };
    collect([&](Index i) { return true; });
    collect([&](Index i) { return spec.seq.contains(i); });
    collect([&](Index i) { return !spec.seq.contains(i); });
    if (!nprime.empty())
      collect([&](Index i) { return spec.seq.contains(i) && !contains_index(nprime, i); });

    RightSkewRow row;
    row.A = A;
    bool found = false;
    for (const auto& B : candidates) {
      double r = norm_of(indicator(B), spec) / na;
      if (!found || r < row.ratio) {
        row.ratio = r;
        row.B = B;
        found = true;
      }
    }
    if (!found) {
      rep.pass = false;
      return true;
    }
    rep.worst_ratio = std::max(rep.worst_ratio, row.ratio);
    if (row.ratio > c_target + kTol) rep.pass = false;
    rep.rows.push_back(row);
    return true;
  });
  return rep;
}

std::pair<bool, AdmissiblePair> weight_admissibility(const Weight& omega, const IndexSequence& n,
                                                     const std::vector<Index>& A,
                                                     const std::vector<Index>& B) {
  ClassContext ctx;
  ctx.n = n;
  ctx.omega = omega;
  AdmissiblePair p = classify_pair(A, B, ctx);
  return {p.in(PairClass::TOmegaN), p};
}

Weight norm_induced_weight(const NormSpec& spec) {
  return Weight::from_evaluator(
      [spec](const std::vector<Index>& A) { return norm_of(indicator(A), spec); },
      "norm_induced:" + spec.id);
}

double window_limsup(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("window_limsup: empty window");
  double best = 0;
  for (std::size_t i = values.size() / 2; i < values.size(); ++i)
    best = std::max(best, values[i]);
  return best;
}

}  // namespace gbl
