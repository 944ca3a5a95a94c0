#include "gbl/greedy.hpp"

#include <algorithm>
#include <cmath>

#include "gbl/sign_pattern.hpp"

namespace gbl {

SparseVector prefix_project(const SparseVector& x, const IndexSequence& n, int m) {
  if (m < 0) throw std::invalid_argument("prefix_project: m must be >= 0");
  if (m > 0 && !n.has_at_least(m))
    throw std::out_of_range("prefix_project: m exceeds represented window");
  return x.restricted(n.prefix(m));
}

bool GreedySetFamily::contains_set(const std::vector<Index>& A) const {
  return std::find(sets.begin(), sets.end(), A) != sets.end();
}

GreedySetFamily greedy_sets(const SparseVector& x, int m, Index window) {
  if (m < 0) throw std::invalid_argument("greedy_sets: m must be >= 0");
  if (m > window) throw std::invalid_argument("greedy_sets: m exceeds window size");
  GreedySetFamily fam;
  fam.m = m;
  if (m == 0) {
    fam.sets.push_back({});
    return fam;
  }

  std::vector<std::pair<double, Index>> by_modulus;
  for (const auto& [i, v] : x.entries()) by_modulus.push_back({std::abs(v), i});
  std::sort(by_modulus.begin(), by_modulus.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  const int support = static_cast<int>(by_modulus.size());
  if (m > support) {
    // Threshold is zero: every greedy set is supp(x) plus padding zeros.
    std::vector<Index> A;
    for (const auto& [_, i] : by_modulus) A.push_back(i);
    int need = m - support;
    for (Index i = 1; i <= window && need > 0; ++i)
      if (x.coeff(i) == 0.0) {
        A.push_back(i);
        --need;
      }
    if (need > 0) throw std::invalid_argument("greedy_sets: window too small to pad");
    std::sort(A.begin(), A.end());
    fam.sets.push_back(A);
    fam.padding_classes_collapsed = true;
    return fam;
  }

  const double tau = by_modulus[m - 1].first;
  std::vector<Index> mandatory, ties;
  for (const auto& [a, i] : by_modulus) {
    if (a > tau)
      mandatory.push_back(i);
    else if (a == tau)
      ties.push_back(i);
  }
  const int take = m - static_cast<int>(mandatory.size());
  // C(|ties|, take) expansions, capped.
  long double count = 1;
  for (int q = 0; q < take; ++q) count = count * (ties.size() - q) / (q + 1);
  if (count > kTieCap)
    throw TieOverflowError("greedy_sets: tie expansion exceeds cap of " +
                           std::to_string(kTieCap));
  std::sort(ties.begin(), ties.end());
  for_each_subset(ties, take, [&](const std::vector<Index>& chosen) {
    if (static_cast<int>(chosen.size()) != take) return true;
    std::vector<Index> A = mandatory;
    A.insert(A.end(), chosen.begin(), chosen.end());
    std::sort(A.begin(), A.end());
    fam.sets.push_back(A);
    return true;
  });
  return fam;
}

SparseVector truncate(const SparseVector& x, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("truncate: alpha must be > 0");
  SparseVector out;
  for (const auto& [i, v] : x.entries())
    out.set(i, std::abs(v) > alpha ? (v > 0 ? alpha : -alpha) : v);
  return out;
}

ReferenceErrors reference_errors(const SparseVector& x, const NormSpec& spec,
                                 const IndexSequence& n, int m) {
  if (m < 0) throw std::invalid_argument("reference_errors: m must be >= 0");
  ReferenceErrors out;
  const double full = norm_of(x, spec);

  // sigma_hat: direct min over prefixes of n.
  out.sigma_hat = full;
  for (int k = 1; k <= m; ++k) {
    double v = norm_of(x.minus(prefix_project(x, n, k)), spec);
    out.sigma_hat = std::min(out.sigma_hat, v);
  }

  // Support inside n, in position order.
  std::vector<Index> supp_n;
  for (const auto& [i, _] : x.entries())
    if (n.contains(i)) supp_n.push_back(i);

  // sigma_tilde: |A| = m, A inside n. Only A cap supp matters and slack
  // elements of n always exist, so minimize over subsets of size <= m.
  if (subset_count(static_cast<long long>(supp_n.size()), m) > 1e8L)
    throw FeasibilityError("reference_errors: sigma_tilde enumeration too large");
  out.sigma_tilde = full;  // empty intersection always admissible
  for_each_subset(supp_n, m, [&](const std::vector<Index>& S) {
    out.sigma_tilde = std::min(out.sigma_tilde, norm_of(x.restricted_complement(S), spec));
    return true;
  });

  // sigma_check: consecutive blocks {n_{k+1},...,n_{k+m}}. The intersection
  // with supp is a contiguous run of supp_n; a run [a..b] is realizable by an
  // m-long block of positions [s, s+m-1] iff some s covers the run and misses
  // the neighbouring support positions. The disjoint block gives ||x||.
  out.sigma_check = full;
  if (m > 0) {
    const int t = static_cast<int>(supp_n.size());
    for (int a = 0; a < t; ++a) {
      for (int b = a; b < t; ++b) {
        int lo_pos = n.iota(supp_n[a]), hi_pos = n.iota(supp_n[b]);
        if (hi_pos - lo_pos + 1 > m) break;
        int prev_pos = a > 0 ? n.iota(supp_n[a - 1]) : 0;
        int start_min = std::max({1, prev_pos + 1, hi_pos - m + 1});
        int start_max = lo_pos;
        if (b + 1 < t) start_max = std::min<int>(start_max, n.iota(supp_n[b + 1]) - m);
        if (start_min > start_max) continue;
        std::vector<Index> run(supp_n.begin() + a, supp_n.begin() + b + 1);
        out.sigma_check = std::min(out.sigma_check, norm_of(x.restricted_complement(run), spec));
      }
    }
  }

  // sigma_bar: any consecutive n-block with |I cap supp| <= m; intersections
  // are exactly the contiguous runs of supp_n of length <= m (or empty).
  out.sigma_bar = full;
  {
    const int t = static_cast<int>(supp_n.size());
    for (int a = 0; a < t; ++a)
      for (int b = a; b < t && b - a + 1 <= m; ++b) {
        std::vector<Index> run(supp_n.begin() + a, supp_n.begin() + b + 1);
        out.sigma_bar = std::min(out.sigma_bar, norm_of(x.restricted_complement(run), spec));
      }
  }
  return out;
}

double gamma_m(const SparseVector& x, const NormSpec& spec, int m, Index window) {
  GreedySetFamily fam = greedy_sets(x, m, window);
  double best = 0;
  for (const auto& A : fam.sets)
    best = std::max(best, norm_of(x.restricted_complement(A), spec));
  return best;
}

std::vector<ErrorProfileRow> tga_error_profile(const SparseVector& x, const NormSpec& spec,
                                               const IndexSequence& n, int m_max, Index window) {
  std::vector<ErrorProfileRow> rows;
  for (int m = 0; m <= m_max; ++m) {
    ErrorProfileRow row;
    row.m = m;
    row.gamma = gamma_m(x, spec, m, window);
    row.ref = reference_errors(x, spec, n, m);
    if (row.ref.sigma_hat > 0) {
      row.ratio = row.gamma / row.ref.sigma_hat;
    } else if (row.gamma > 0) {
      row.ratio_inf = true;
    } else {
      row.ratio = 0;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string profile_csv(const std::vector<ErrorProfileRow>& rows) {
  std::string out = "# greedy-bases-lab v1\n";
  out += "m,gamma,sigma_hat,sigma_tilde,sigma_check,sigma_bar,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + "," + format_value(r.gamma) + "," +
           format_value(r.ref.sigma_hat) + "," + format_value(r.ref.sigma_tilde) + "," +
           format_value(r.ref.sigma_check) + "," + format_value(r.ref.sigma_bar) + "," +
           (r.ratio_inf ? "inf" : format_value(r.ratio)) + "\n";
  }
  return out;
}

}  // namespace gbl
