#include "braidsec/braid.hpp"
#include "support/artin_oracle.hpp"
#include "support/random_words.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace braidsec;
using testing_support::random_word;

namespace {
BraidWord w(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }
}  // namespace

TEST(BraidWord, RejectsOutOfRangeLetters) {
    EXPECT_THROW(w(3, {3}), std::invalid_argument);
    EXPECT_THROW(w(3, {0}), std::invalid_argument);
    EXPECT_THROW(w(0, {}), std::invalid_argument);
    EXPECT_NO_THROW(w(3, {-2, 1}));
}

TEST(BraidWord, TextRoundTrip) {
    for (const char* text : {"n=3;", "n=4; 1 -2 3", "n=2; -1 -1 1"}) EXPECT_EQ(to_text(parse_braid(text)), text);
    EXPECT_EQ(parse_braid("n = 5 ;  2  -4 ").letters, (std::vector<int>{2, -4}));
    EXPECT_THROW(parse_braid("1 2"), std::invalid_argument);
    EXPECT_THROW(parse_braid("n=3; 1 q"), std::invalid_argument);
    EXPECT_THROW(parse_braid("n=3; 1 3"), std::invalid_argument);
}

TEST(Compose, IdentityAndInversePair) {
    const BraidWord u = w(3, {1, -2});
    EXPECT_EQ(compose(BraidWord(3, {}), u), u);
    EXPECT_EQ(compose(w(3, {1}), w(3, {-1})).letters, (std::vector<int>{1, -1}));
    EXPECT_TRUE(is_identity(compose(w(3, {1}), w(3, {-1}))));
    EXPECT_TRUE(equals(compose(w(3, {1, 2}), w(3, {1})), w(3, {2, 1, 2})));
    EXPECT_THROW(compose(w(3, {}), w(4, {})), std::invalid_argument);
}

TEST(Inverse, FormalReversal) {
    EXPECT_TRUE(inverse(BraidWord(3, {})).empty());
    EXPECT_EQ(inverse(w(3, {1, 2})).letters, (std::vector<int>{-2, -1}));
    std::mt19937 rng(11);
    for (int s = 0; s < 100; ++s) {
        const int n = 2 + static_cast<int>(rng() % 6);
        BraidWord u = random_word(n, static_cast<int>(rng() % 41), rng);
        EXPECT_TRUE(is_identity(compose(u, inverse(u))));
    }
}

TEST(Permutation, ExamplesAndHomomorphism) {
    EXPECT_TRUE(permutation_of(BraidWord(3, {})).is_identity());
    EXPECT_EQ(permutation_of(w(3, {1, 2})).image, (std::vector<int>{2, 3, 1}));
    EXPECT_TRUE(permutation_of(w(3, {1, 1})).is_identity());
    std::mt19937 rng(5);
    for (int s = 0; s < 200; ++s) {
        BraidWord u = random_word(5, 10, rng), v = random_word(5, 10, rng);
        EXPECT_EQ(permutation_of(compose(u, v)), permutation_of(u) * permutation_of(v));
    }
}

TEST(Purity, Examples) {
    EXPECT_TRUE(is_pure(BraidWord(3, {})));
    EXPECT_FALSE(is_pure(w(3, {1})));
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(is_pure(artin_generator(n, i, j)));
}

TEST(WordProblem, Examples) {
    EXPECT_TRUE(is_identity(w(3, {1, 2, 1, -2, -1, -2})));
    EXPECT_TRUE(is_identity(w(4, {1, 3, -1, -3})));
    EXPECT_FALSE(is_identity(w(3, {1, 1})));
    EXPECT_TRUE(equals(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
    EXPECT_FALSE(equals(w(3, {1, 1}), w(3, {2, 2})));
    // same permutation and zero linking, still nontrivial: a commutator
    EXPECT_FALSE(is_identity(w(3, {1, 1, 2, 2, -1, -1, -2, -2})));
}

TEST(WordProblem, BraidRelationsUpToEightStrands) {
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                if (std::abs(i - j) == 1) {
                    EXPECT_TRUE(equals(w(n, {i, j, i}), w(n, {j, i, j})));
                }
                if (std::abs(i - j) >= 2) {
                    EXPECT_TRUE(equals(w(n, {i, j}), w(n, {j, i})));
                }
                if (std::abs(i - j) == 1) {
                    EXPECT_FALSE(equals(w(n, {i, j}), w(n, {j, i})));
                }
            }
}

TEST(WordProblem, AgreesWithFreeGroupAction) {
    std::mt19937 rng(2024);
    int nontrivial = 0;
    for (int s = 0; s < 400; ++s) {
        const int n = 2 + static_cast<int>(rng() % 4);
        BraidWord u = random_word(n, 1 + static_cast<int>(rng() % 10), rng);
        // short commutators give many trivial and many subtle nontrivial cases
        BraidWord c = compose(compose(u, random_word(n, 2, rng)), inverse(u));
        for (const BraidWord& x : {u, c}) {
            const bool expect = oracle::fixes_free_group(x);
            nontrivial += !expect;
            EXPECT_EQ(is_identity(x), expect) << to_text(x);
        }
    }
    EXPECT_GT(nontrivial, 100);
}

TEST(ArtinGenerator, Examples) {
    EXPECT_EQ(artin_generator(3, 1, 2).letters, (std::vector<int>{1, 1}));
    LinkingMatrix e13(3);
    e13.at(1, 3) = e13.at(3, 1) = 1;
    EXPECT_EQ(linking_matrix(artin_generator(3, 1, 3)), e13);
    std::vector<BraidWord> gens;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) gens.push_back(artin_generator(5, i, j));
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) EXPECT_FALSE(equals(gens[a], gens[b]));
    EXPECT_THROW(artin_generator(3, 2, 2), std::out_of_range);
}

TEST(LinkingMatrix, ExamplesAndAdditivity) {
    EXPECT_TRUE(linking_matrix(BraidWord(4, {})).is_zero());
    LinkingMatrix e23(4);
    e23.at(2, 3) = e23.at(3, 2) = 1;
    EXPECT_EQ(linking_matrix(artin_generator(4, 2, 3)), e23);
    EXPECT_THROW(linking_matrix(w(3, {1})), std::invalid_argument);
    std::mt19937 rng(9);
    for (int s = 0; s < 100; ++s) {
        BraidWord u = compose(compose(artin_generator(5, 1 + s % 4, 5), w(5, {2, 2})), artin_generator(5, 1, 3));
        BraidWord v = inverse(compose(artin_generator(5, 2, 4), artin_generator(5, 1 + s % 3, 4)));
        EXPECT_EQ(linking_matrix(compose(u, v)), linking_matrix(u) + linking_matrix(v));
        EXPECT_EQ(linking_matrix(inverse(u)), -linking_matrix(u));
    }
}

TEST(ForgetStrand, Examples) {
    EXPECT_TRUE(forget_strand(BraidWord(3, {}), 2).empty());
    EXPECT_TRUE(equals(forget_strand(artin_generator(3, 1, 3), 2), artin_generator(2, 1, 2)));
    EXPECT_TRUE(is_identity(forget_strand(artin_generator(3, 1, 3), 3)));
    EXPECT_THROW(forget_strand(w(3, {1}), 1), std::invalid_argument);
    EXPECT_THROW(forget_strand(w(3, {1, 1}), 4), std::out_of_range);
}

TEST(ForgetStrand, HomomorphismOnPureWords) {
    std::mt19937 rng(31);
    for (int s = 0; s < 100; ++s) {
        const int n = 3 + s % 3;
        auto pure = [&] {
            BraidWord x(n, {});
            for (int k = 0; k < 4; ++k) {
                int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
                if (i == j) continue;
                BraidWord g = artin_generator(n, std::min(i, j), std::max(i, j));
                x = compose(x, rng() % 2 ? g : inverse(g));
            }
            return x;
        };
        BraidWord u = pure(), v = pure();
        const int t = 1 + s % n;
        BraidWord lhs = forget_strand(compose(u, v), t);
        EXPECT_TRUE(is_pure(lhs));
        EXPECT_TRUE(equals(lhs, compose(forget_strand(u, t), forget_strand(v, t))));
    }
}

TEST(WordProblem, PrefiltersAreNecessary) {
    std::mt19937 rng(77);
    for (int s = 0; s < 300; ++s) {
        BraidWord u = random_word(4, 8, rng);
        BraidWord t = testing_support::relation_trivial(u, 2, rng);
        ASSERT_TRUE(is_identity(t));
        EXPECT_TRUE(permutation_of(t).is_identity());
        EXPECT_TRUE(linking_matrix(t).is_zero());
    }
}
