#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gbl/index_sequence.hpp"
#include "gbl/pairs.hpp"
#include "gbl/sign_pattern.hpp"
#include "gbl/sparse_vector.hpp"

using namespace gbl;

TEST_CASE("indicator builds signed sums") {
  SparseVector x = indicator({2, 4}, SignPattern::from({{2, 1}, {4, -1}}));
  CHECK(x.coeff(2) == 1.0);
  CHECK(x.coeff(4) == -1.0);
  CHECK(x.support_size() == 2);

  CHECK(indicator({}).empty());

  SparseVector y = indicator({1, 2, 3});
  CHECK(y.coeff(1) == 1.0);
  CHECK(y.coeff(2) == 1.0);
  CHECK(y.coeff(3) == 1.0);

  // signs on a strict superset are accepted, missing signs are an error
  SignPattern super = SignPattern::from({{2, 1}, {4, -1}, {6, 1}});
  CHECK(indicator({2, 4}, super).coeff(4) == -1.0);
  CHECK_THROWS_AS(indicator({2, 5}, super), std::invalid_argument);
}

TEST_CASE("projection copies coefficients exactly") {
  SparseVector x{{1, 3.0}, {2, -1.0}};
  SparseVector p = project(x, {2});
  CHECK(p.support_size() == 1);
  CHECK(p.coeff(2) == -1.0);

  CHECK(project(x, x.support()) == x);
  CHECK(project(x, {}).empty());

  // restriction + complement reassembles x with no floating error
  SparseVector a = x.restricted({1});
  SparseVector b = x.restricted_complement({1});
  CHECK(a.plus(b) == x);
  CHECK(project(project(x, {2}), {2}) == project(x, {2}));
}

TEST_CASE("prefix projection along a sequence") {
  IndexSequence evens = IndexSequence::evens();
  SparseVector x{{1, 1.0}, {2, 1.0}, {4, 1.0}, {6, 1.0}};
  SparseVector p = prefix_project(x, evens, 2);
  CHECK(p == SparseVector{{2, 1.0}, {4, 1.0}});
  CHECK(prefix_project(x, evens, 0).empty());

  // no even index in the support: evaluates to the zero vector
  SparseVector odd{{1, 1.0}, {3, 1.0}};
  CHECK(prefix_project(odd, evens, 3).empty());

  IndexSequence finite = IndexSequence::list({2, 4, 6});
  CHECK_THROWS_AS(prefix_project(x, finite, 4), std::out_of_range);
}

TEST_CASE("index sequences: inverse enumeration and membership agree") {
  for (const IndexSequence& s :
       {IndexSequence::evens(), IndexSequence::list({3, 5, 9, 14}),
        IndexSequence::predicate("squares", 100)}) {
    for (int k = 1; k <= 4; ++k) {
      Index v = s.nth(k);
      CHECK(s.contains(v));
      CHECK(s.iota(v) == k);
    }
  }
  CHECK(IndexSequence::evens().iota(20) == 10);
  CHECK_FALSE(IndexSequence::evens().contains(3));
  CHECK_THROWS(IndexSequence::evens().iota(3));
  CHECK_THROWS(IndexSequence::list({2, 1}));
}

TEST_CASE("index sequence JSON round trip") {
  for (const IndexSequence& s :
       {IndexSequence::arithmetic(2, 2), IndexSequence::list({1, 4, 9}),
        IndexSequence::predicate("powers_of_two", 64)}) {
    CHECK(IndexSequence::from_json(s.to_json()) == s);
  }
  auto j = IndexSequence::arithmetic(2, 2).to_json();
  CHECK(j["kind"] == "arithmetic");
  CHECK(j["first"] == 2);
  CHECK(j["step"] == 2);
}

TEST_CASE("classify_pair: order and size classes") {
  ClassContext ctx;
  ctx.n = IndexSequence::evens();

  AdmissiblePair p1 = classify_pair({2, 4}, {6, 7}, ctx);
  CHECK(p1.in(PairClass::TN));
  CHECK(p1.in(PairClass::SN));

  // B cap n empty: the order comparison is vacuous
  AdmissiblePair p2 = classify_pair({2, 4}, {5, 7}, ctx);
  CHECK(p2.in(PairClass::TN));

  // 1 is not in the sequence
  AdmissiblePair p3 = classify_pair({1, 2}, {4, 6}, ctx);
  CHECK_FALSE(p3.in(PairClass::TN));
  CHECK_FALSE(p3.in(PairClass::SN));

  // vacuous conventions: empty sets compare below anything
  CHECK(classify_pair({}, {2}, ctx).in(PairClass::TN));
  CHECK(classify_pair({}, {}, ctx).in(PairClass::TN));
  // |A| <= |B| fails
  CHECK_FALSE(classify_pair({2, 4}, {6}, ctx).in(PairClass::SN));
}

TEST_CASE("classify_pair: gap, weight, and enlarged-sum classes") {
  ClassContext ctx;
  ctx.n = IndexSequence::evens();
  ctx.s = IndexSequence::list({1, 3, 7});
  ctx.omega = Weight::cardinality();
  ctx.lambda = 2.0;

  // A <= n_1 = 2 < B cap n = {8}
  CHECK(classify_pair({2}, {8}, ctx).in(PairClass::TNS));
  // no gap element fits between iota(4) = 2 and iota(6) = 3
  CHECK_FALSE(classify_pair({4}, {6}, ctx).in(PairClass::TNS));
  // B cap n empty qualifies outright
  CHECK(classify_pair({2, 4}, {5, 7}, ctx).in(PairClass::TNS));

  CHECK(classify_pair({2}, {4, 6}, ctx).in(PairClass::TOmegaN));
  CHECK_FALSE(classify_pair({2, 4}, {6}, ctx).in(PairClass::TOmegaN));

  // lambda: (2-1)*iota(max A) + |A| <= |B|; A = {4}: 2 + 1 = 3
  CHECK(classify_pair({4}, {6, 7, 9}, ctx).in(PairClass::Lambda));
  CHECK_FALSE(classify_pair({4}, {6, 7}, ctx).in(PairClass::Lambda));
  CHECK(classify_pair({}, {}, ctx).in(PairClass::Lambda));
}

TEST_CASE("enumerate_pairs: listing, caps, and the feasibility guard") {
  ClassContext ctx;
  ctx.n = IndexSequence::evens();

  std::set<std::pair<std::vector<Index>, std::vector<Index>>> seen;
  enumerate_pairs(ctx, 6, 1, PairClass::TN,
                  [&](const AdmissiblePair& p) { seen.insert({p.A, p.B}); });
  CHECK(seen.count({{2}, {4}}) == 1);
  CHECK(seen.count({{2}, {3}}) == 1);
  CHECK(seen.count({{4}, {2}}) == 0);

  seen.clear();
  enumerate_pairs(ctx, 4, 0, PairClass::TN,
                  [&](const AdmissiblePair& p) { seen.insert({p.A, p.B}); });
  CHECK(seen.size() == 1);
  CHECK(seen.count({{}, {}}) == 1);

  CHECK_THROWS_AS(enumerate_pairs(ctx, 4096, 12, PairClass::TN, [](const AdmissiblePair&) {}),
                  FeasibilityError);
}

TEST_CASE("enumerate_pairs count matches an independent bitmask enumerator") {
  ClassContext ctx;
  ctx.n = IndexSequence::evens();
  long long streamed = 0;
  enumerate_pairs(ctx, 6, 2, PairClass::SN, [&](const AdmissiblePair&) { ++streamed; });

  // independent: raw bitmask loop with the size-class predicate inlined
  long long direct = 0;
  for (unsigned a = 0; a < 64; ++a) {
    if (__builtin_popcount(a) > 2) continue;
    bool a_in_n = true;
    for (int bit = 0; bit < 6; ++bit)
      if (((a >> bit) & 1u) && (bit + 1) % 2 != 0) a_in_n = false;
    if (!a_in_n) continue;
    for (unsigned b = 0; b < 64; ++b) {
      if (__builtin_popcount(b) > 2) continue;
      if (__builtin_popcount(a) <= __builtin_popcount(b)) ++direct;
    }
  }
  CHECK(streamed == direct);
}

TEST_CASE("enumerated order-class pairs satisfy their defining conditions") {
  ClassContext ctx;
  ctx.n = IndexSequence::evens();
  long long count = 0;
  enumerate_pairs(ctx, 8, 2, PairClass::TN, [&](const AdmissiblePair& p) {
    ++count;
    CHECK(p.A.size() <= p.B.size());
    for (Index a : p.A) CHECK(ctx.n.contains(a));
    std::vector<Index> bn;
    for (Index b : p.B)
      if (ctx.n.contains(b)) bn.push_back(b);
    if (!p.A.empty() && !bn.empty()) CHECK(p.A.back() < bn.front());
    CHECK(classify_pair(p.A, p.B, ctx).in(PairClass::TN));
  });
  CHECK(count > 0);

  // converse: every classified pair appears in the stream
  std::set<std::pair<std::vector<Index>, std::vector<Index>>> streamed;
  enumerate_pairs(ctx, 6, 2, PairClass::TN,
                  [&](const AdmissiblePair& p) { streamed.insert({p.A, p.B}); });
  std::vector<Index> universe{1, 2, 3, 4, 5, 6};
  std::vector<Index> n_universe{2, 4, 6};
  for_each_subset(n_universe, 2, [&](const std::vector<Index>& A) {
    for_each_subset(universe, 2, [&](const std::vector<Index>& B) {
      bool classified = classify_pair(A, B, ctx).in(PairClass::TN);
      CHECK(classified == (streamed.count({A, B}) == 1));
      return true;
    });
    return true;
  });
}

TEST_CASE("weights: empty set maps to zero, positivity elsewhere") {
  Weight card = Weight::cardinality();
  CHECK(card({}) == 0.0);
  CHECK(card({3, 5}) == 2.0);
  Weight seq = Weight::from_sequence({0.5, 1.5, 2.5});
  CHECK(seq({1, 3}) == 3.0);
  CHECK(seq({4}) == std::numeric_limits<double>::infinity());
  CHECK_THROWS(Weight::from_sequence({1.0, 0.0}));
}
