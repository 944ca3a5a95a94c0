#include "gbl/pairs.hpp"

#include <cmath>

namespace gbl {

std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::TN: return "T_n";
    case PairClass::SN: return "S_n";
    case PairClass::TNS: return "T_n_s";
    case PairClass::TOmegaN: return "T_omega_n";
    case PairClass::Lambda: return "lambda";
  }
  return "?";
}

namespace {

bool subset_of_seq(const std::vector<Index>& A, const IndexSequence& n) {
  for (Index a : A)
    if (!n.contains(a)) return false;
  return true;
}

std::vector<Index> intersect_seq(const std::vector<Index>& B, const IndexSequence& n) {
  std::vector<Index> out;
  for (Index b : B)
    if (n.contains(b)) out.push_back(b);
  return out;
}

// Existence of s in the gap sequence with max A <= n_s < min(B cap n). When
// B cap n is empty the pair already qualifies (any large enough s works).
bool order_gap_exists(const std::vector<Index>& A, const std::vector<Index>& Bn,
                      const IndexSequence& n, const IndexSequence& s) {
  if (Bn.empty()) return true;
  int hi = n.iota(Bn.front());          // need s < iota(min Bn)
  int lo = A.empty() ? 1 : n.iota(A.back());  // need s >= iota(max A)
  for (Index sv : s.elements_up_to(hi - 1))
    if (sv >= lo) return true;
  return false;
}

}  // namespace

AdmissiblePair classify_pair(const std::vector<Index>& A, const std::vector<Index>& B,
                             const ClassContext& ctx) {
  AdmissiblePair p;
  p.A = A;
  p.B = B;
  const bool a_in_n = subset_of_seq(A, ctx.n);
  const std::vector<Index> Bn = intersect_seq(B, ctx.n);
  const bool size_ok = A.size() <= B.size();
  const bool order_ok = set_below(A, Bn);

  if (a_in_n && size_ok) {
    p.classes.insert(PairClass::SN);
    if (order_ok) p.classes.insert(PairClass::TN);
    if (ctx.s && order_gap_exists(A, Bn, ctx.n, *ctx.s)) p.classes.insert(PairClass::TNS);
  }
  if (a_in_n && order_ok && ctx.omega && (*ctx.omega)(A) <= (*ctx.omega)(B))
    p.classes.insert(PairClass::TOmegaN);
  if (a_in_n && order_ok && ctx.lambda) {
    double lhs = A.empty() ? 0.0
                           : (*ctx.lambda - 1.0) * ctx.n.iota(A.back()) +
                                 static_cast<double>(A.size());
    if (lhs <= static_cast<double>(B.size()) + 1e-12) p.classes.insert(PairClass::Lambda);
  }
  return p;
}

long double estimate_pair_count(const ClassContext& ctx, Index window, int size_cap) {
  long long na = ctx.n.count_up_to(window);
  return subset_count(na, size_cap) * subset_count(window, size_cap);
}

void enumerate_pairs(const ClassContext& ctx, Index window, int size_cap, PairClass cls,
                     const std::function<void(const AdmissiblePair&)>& visit) {
  if (estimate_pair_count(ctx, window, size_cap) > 1e8L)
    throw FeasibilityError("enumerate_pairs: estimated pair count exceeds 1e8");
  if (cls == PairClass::TNS && !ctx.s)
    throw std::invalid_argument("enumerate_pairs: T_n_s needs a gap sequence");
  if (cls == PairClass::TOmegaN && !ctx.omega)
    throw std::invalid_argument("enumerate_pairs: T_omega_n needs a weight");
  if (cls == PairClass::Lambda && !ctx.lambda)
    throw std::invalid_argument("enumerate_pairs: lambda class needs lambda");

  std::vector<Index> a_universe = ctx.n.elements_up_to(window);
  std::vector<Index> b_universe;
  for (Index i = 1; i <= window; ++i) b_universe.push_back(i);

  for_each_subset(a_universe, size_cap, [&](const std::vector<Index>& A) {
    for_each_subset(b_universe, size_cap, [&](const std::vector<Index>& B) {
      AdmissiblePair p = classify_pair(A, B, ctx);
      if (p.in(cls)) visit(p);
      return true;
    });
    return true;
  });
}

}  // namespace gbl
