#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "braidkit/alexander.hpp"
#include "braidkit/families.hpp"
#include "braidkit/twisted_torus.hpp"
#include "test_support.hpp"

using namespace braidkit;
using braidkit::testing::random_knot_word;
using braidkit::testing::random_word;

namespace {

LaurentPoly poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return LaurentPoly(std::move(v), 0);
}

BraidWord embed(const BraidWord& w, int strands) {
  return BraidWord(strands, std::vector<int>(w.codes().begin(), w.codes().end()));
}

void expect_alexander_shape(const LaurentPoly& a) {
  EXPECT_EQ(normalize_alexander(a), normalize_alexander(a.reflect()));
  EXPECT_TRUE(a.at_one() == 1 || a.at_one() == -1) << a;
}

}  // namespace

TEST(ReducedBurau, SmallCases) {
  EXPECT_EQ(reduced_burau(BraidWord(4)), BurauMatrix::identity(3));
  const BurauMatrix s = reduced_burau(BraidWord(2, {1}));
  ASSERT_EQ(s.dim(), 1);
  EXPECT_EQ(s(0, 0), -LaurentPoly::t());
  EXPECT_THROW(reduced_burau(BraidWord(1)), DomainError);
}

TEST(ReducedBurau, InverseAndMultiplicativity) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord a = random_word(rng, n, 10);
    const BraidWord b = random_word(rng, n, 10);
    EXPECT_EQ(reduced_burau(a) * reduced_burau(invert(a)), BurauMatrix::identity(n - 1));
    EXPECT_EQ(reduced_burau(a * b), reduced_burau(a) * reduced_burau(b));
  }
}

TEST(ReducedBurau, BraidRelations) {
  EXPECT_EQ(reduced_burau(BraidWord(4, {1, 2, 1})), reduced_burau(BraidWord(4, {2, 1, 2})));
  EXPECT_EQ(reduced_burau(BraidWord(4, {1, 3})), reduced_burau(BraidWord(4, {3, 1})));
  EXPECT_NE(reduced_burau(BraidWord(4, {1, 2})), reduced_burau(BraidWord(4, {2, 1})));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const BurauMatrix m = reduced_burau(random_word(rng, 4, 8));
    const auto& e = m;
    const LaurentPoly cofactor = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                                 e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                                 e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    EXPECT_EQ(determinant(m), cofactor);
  }
}

TEST(Alexander, KnownKnots) {
  EXPECT_EQ(alexander(BraidWord(2, {1, 1, 1})), poly({1, -1, 1}));
  EXPECT_EQ(alexander(BraidWord(2, {1, 1, 1, 1, 1})), poly({1, -1, 1, -1, 1}));
  EXPECT_EQ(alexander(BraidWord(3, {1, -2, 1, -2})), poly({1, -3, 1}));
  EXPECT_EQ(alexander(BraidWord(1)), poly({1}));
  EXPECT_EQ(alexander(BraidWord(3, {1, 2})), poly({1}));
}

TEST(Alexander, Errors) {
  EXPECT_THROW(alexander(BraidWord(3)), DomainError);
  EXPECT_THROW(alexander(BraidWord(2, {1, 1})), DomainError);
  InvariantOptions tight;
  tight.degree_cap = 4;
  EXPECT_THROW(alexander(BraidWord(2, {1, 1, 1, 1, 1}), tight), ResourceError);
  EXPECT_NO_THROW(alexander(BraidWord(2, {1, 1, 1}), tight));
}

TEST(TorusAlexander, ClosedForms) {
  EXPECT_EQ(torus_alexander(3, 2), poly({1, -1, 1}));
  EXPECT_EQ(torus_alexander(5, 2), poly({1, -1, 1, -1, 1}));
  EXPECT_EQ(torus_alexander(4, 3), poly({1, -1, 0, 1, 0, -1, 1}));
  EXPECT_EQ(torus_alexander(7, 3), torus_alexander(3, 7));
  EXPECT_THROW(torus_alexander(6, 4), DomainError);
  EXPECT_THROW(torus_alexander(1, 4), DomainError);
  InvariantOptions tight;
  tight.degree_cap = 20;
  EXPECT_THROW(torus_alexander(7, 3, tight), ResourceError);
}

TEST(TorusAlexander, MatchesBraidClosure) {
  for (auto [p, q] : {std::pair{7L, 3L}, {11L, 5L}, {16L, 5L}, {5L, 3L}, {9L, 4L}}) {
    EXPECT_EQ(alexander(ttk_braid({p, q, 1, -1})), torus_alexander(p, q)) << p << "," << q;
  }
}

TEST(Alexander, ConjugationInvariance) {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord w = random_knot_word(rng, n, 12);
    const BraidWord c = random_word(rng, n, 8);
    const LaurentPoly a = alexander(w);
    EXPECT_EQ(alexander(conjugate(w, c)), a);
    expect_alexander_shape(a);
  }
}

TEST(Alexander, MarkovStability) {
  std::mt19937_64 rng(309);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord w = random_knot_word(rng, n, 12);
    const int sign = trial % 2 ? 1 : -1;
    BraidWord stabilized = embed(w, n + 1);
    stabilized.push_back(sign * n);
    EXPECT_EQ(alexander(stabilized), alexander(w));
  }
}

TEST(ClosureComponents, Examples) {
  EXPECT_EQ(closure_components(BraidWord(3)), 3);
  for (int q = 2; q <= 6; ++q)
    for (int p = 1; p <= 12; ++p)
      EXPECT_EQ(closure_components(power(rev(pi(1, q - 1, q)), p)), std::gcd(p, q)) << p << "," << q;
  EXPECT_EQ(closure_components(ttk_braid({12, 5, 2, -1})), 1);
}

TEST(Alexander, TwistedTorusPairsAgree) {
  for (long q : {5L, 7L})
    for (long k : {2L, 3L}) {
      const FamilyPair pair = t1_pair(q, k);
      const LaurentPoly a = alexander(ttk_braid(pair.first));
      EXPECT_EQ(alexander(ttk_braid(pair.second)), a) << q << "," << k;
      expect_alexander_shape(a);
    }
}
