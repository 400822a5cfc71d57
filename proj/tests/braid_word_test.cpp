#include <gtest/gtest.h>

#include <random>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"
#include "test_support.hpp"

using namespace braidkit;
using braidkit::testing::random_word;

TEST(BraidWord, ValidatesLetters) {
  EXPECT_THROW(BraidWord(3, {3}), DomainError);
  EXPECT_THROW(BraidWord(3, {0}), DomainError);
  EXPECT_THROW(BraidWord(3, {-3}), DomainError);
  EXPECT_THROW(BraidWord(0), DomainError);
  EXPECT_NO_THROW(BraidWord(3, {2, -2, 1}));
  EXPECT_TRUE(BraidWord(1).empty());
}

TEST(BraidWord, LetterDecoding) {
  const BraidWord w(4, {2, -3});
  EXPECT_EQ(w.letter(0), (BraidLetter{2, 1}));
  EXPECT_EQ(w.letter(1), (BraidLetter{3, -1}));
}

TEST(WordAlgebra, Invert) { EXPECT_EQ(invert(BraidWord(3, {1, 2})), BraidWord(3, {-2, -1})); }

TEST(WordAlgebra, PowerZeroIsEmpty) { EXPECT_TRUE(power(BraidWord(3, {1}), 0).empty()); }

TEST(WordAlgebra, NegativePowerUsesInverse) {
  EXPECT_EQ(power(BraidWord(3, {1, 2}), -2), BraidWord(3, {-2, -1, -2, -1}));
}

TEST(WordAlgebra, ConjugateIsInverseWordConjugator) {
  const BraidWord w(4, {1});
  const BraidWord c(4, {2, 3});
  EXPECT_EQ(conjugate(w, c), BraidWord(4, {-3, -2, 1, 2, 3}));
}

TEST(WordAlgebra, StrandMismatchThrows) {
  EXPECT_THROW(BraidWord(3) * BraidWord(4), StrandMismatch);
  EXPECT_THROW(conjugate(BraidWord(3), BraidWord(4)), StrandMismatch);
}

TEST(WordAlgebra, ConjugatingFullTwistIsTrivial) {
  std::mt19937_64 rng(11);
  const BraidWord full = power(half_twist(5), 2);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(equals(conjugate(full, random_word(rng, 5)), full));
}

TEST(Pi, Expansion) {
  EXPECT_EQ(pi(1, 3, 5), BraidWord(5, {1, 2, 3}));
  EXPECT_EQ(pi(3, 4, 5), BraidWord(5, {3, 4}));
  EXPECT_TRUE(pi(1, 0, 5).empty());
}

TEST(Pi, RejectsBadBounds) {
  EXPECT_THROW(pi(0, 2, 5), DomainError);
  EXPECT_THROW(pi(1, 5, 5), DomainError);
  EXPECT_THROW(pi(3, 1, 5), DomainError);
}

TEST(Delta, Expansion) {
  EXPECT_EQ(delta(1, 2, 3), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(delta(3, 4, 5), BraidWord(5, {3, 4, 3}));
  EXPECT_EQ(delta(1, 4, 5).size(), 10u);
  EXPECT_TRUE(delta(2, 1, 5).empty());
  EXPECT_EQ(delta(1, 1, 3), BraidWord(3, {1}));
}

TEST(Rev, ReversesWithoutFlippingSigns) {
  EXPECT_EQ(rev(BraidWord(4, {1, 2, 3})), BraidWord(4, {3, 2, 1}));
  EXPECT_TRUE(rev(BraidWord(4)).empty());
  EXPECT_EQ(rev(BraidWord(4, {1, -2})), BraidWord(4, {-2, 1}));
}

TEST(Rev, TorusBlockOfBeta) {
  for (int r = 2; r <= 5; ++r) {
    BraidWord expected(2 * r + 1);
    for (int i = 2 * r; i >= 1; --i) expected.push_back(i);
    EXPECT_EQ(rev(pi(1, 2 * r, 2 * r + 1)), expected);
  }
}

TEST(Rev, Involution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const BraidWord w = random_word(rng, 6);
    EXPECT_EQ(rev(rev(w)), w);
  }
}

TEST(FreeReduce, Cancellations) {
  EXPECT_TRUE(free_reduce(BraidWord(3, {1, -1})).empty());
  EXPECT_TRUE(free_reduce(BraidWord(3, {1, 2, -2, -1})).empty());
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, 1})), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(free_reduce(BraidWord(4, {3, 1, -1, 2})), BraidWord(4, {3, 2}));
}

TEST(FreeReduce, NoAdjacentInversePairsAndSameElement) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const BraidWord w = random_word(rng, 4);
    const BraidWord red = free_reduce(w);
    for (std::size_t k = 0; k + 1 < red.size(); ++k) EXPECT_NE(red.codes()[k], -red.codes()[k + 1]);
    EXPECT_TRUE(equals(w, red));
  }
}

TEST(PermutationImage, Examples) {
  EXPECT_EQ(permutation(BraidWord(3, {1})).images(), (std::vector<int>{1, 0, 2}));
  EXPECT_TRUE(permutation(power(BraidWord(3, {2, 1}), 3)).is_identity());
}

TEST(PermutationImage, Homomorphism) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const BraidWord u = random_word(rng, 5);
    const BraidWord v = random_word(rng, 5);
    EXPECT_EQ(permutation(u * v), permutation(u) * permutation(v));
  }
}

TEST(PermutationImage, InverseWordGivesInversePermutation) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w = random_word(rng, 6);
    EXPECT_EQ(permutation(invert(w)), permutation(w).inverse());
  }
}

TEST(ExponentSum, Examples) {
  const BraidWord beta1 = power(BraidWord(5, {4, 3, 2, 1}), 2) * BraidWord(5, {-1, -1});
  const BraidWord beta2 = power(BraidWord(5, {4, 3, 2, 1}), 3) * power(BraidWord(5, {-1, -2}), 3);
  EXPECT_EQ(exponent_sum(beta1), 6);
  EXPECT_EQ(exponent_sum(beta2), 6);
  EXPECT_EQ(exponent_sum(BraidWord(5)), 0);
}

TEST(ExponentSum, ConjugationAndReductionInvariant) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    const BraidWord w = random_word(rng, 5);
    const BraidWord c = random_word(rng, 5);
    EXPECT_EQ(exponent_sum(conjugate(w, c)), exponent_sum(w));
    EXPECT_EQ(exponent_sum(free_reduce(w)), exponent_sum(w));
    EXPECT_EQ(exponent_sum(w * c), exponent_sum(w) + exponent_sum(c));
  }
}

// sigma_t Pi_s^l = Pi_s^l sigma_{t-1} and its inverse companion, over
// random admissible triples.
TEST(BlockIdentities, ShiftPastPiBlock) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const int s = std::uniform_int_distribution<int>(2, n - 1)(rng);
    const int t = std::uniform_int_distribution<int>(2, s)(rng);
    const int l = std::uniform_int_distribution<int>(1, t - 1)(rng);
    const BraidWord block = pi(l, s, n);
    EXPECT_TRUE(equals(BraidWord::generator(n, t) * block, block * BraidWord::generator(n, t - 1)));
    EXPECT_TRUE(
        equals(BraidWord::generator(n, t - 1) * invert(block), invert(block) * BraidWord::generator(n, t)));
  }
}

TEST(BraidWord, HandlesLongWords) {
  BraidWord w = power(rev(pi(1, 4, 5)), 25000);
  EXPECT_EQ(w.size(), 100000u);
  EXPECT_EQ(exponent_sum(w), 100000);
}

TEST(BraidWord, ToString) {
  EXPECT_EQ(to_string(BraidWord(3, {1, -2})), "s1 S2");
  EXPECT_EQ(to_string(BraidWord(3)), "e");
}
