// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "certgraph/contracts.hpp"
#include "certgraph/oracle.hpp"

using namespace certgraph;

namespace {

int int_compare(int a, int b) {
    return a < b ? -1 : (a == b ? 0 : 1);
}

// Independent law check over every pair and every triple, written out the
// long way so it shares nothing with check_preorder.
template <class T, class C>
bool brute_force_preorder(const std::vector<T>& xs, C cmp, int& triples) {
    triples = 0;
    bool ok = true;
    for (const auto& x : xs) {
        for (const auto& y : xs) {
            for (const auto& z : xs) {
                ++triples;
                const bool refl = cmp(x, x) == 0;
                const int sxy = cmp(x, y) > 0 ? 1 : (cmp(x, y) < 0 ? -1 : 0);
                const int syx = cmp(y, x) > 0 ? 1 : (cmp(y, x) < 0 ? -1 : 0);
                const bool anti = sxy == -syx;
                const bool trans = !(cmp(x, y) <= 0 && cmp(y, z) <= 0) || cmp(x, z) <= 0;
                ok = ok && refl && anti && trans;
            }
        }
    }
    return ok;
}

} // namespace

TEST(CheckPreorder, IntegerCompareIsPreorder) {
    const std::vector<int> sample{0, 1, 2};
    EXPECT_TRUE(check_preorder<int>(int_compare, std::span<const int>(sample)));
}

TEST(CheckPreorder, RandomSignCompareIsRejected) {
    std::mt19937 rng(7);
    const auto random_cmp = [&](int, int) { return rng() % 2 == 0 ? -1 : 1; };
    const std::vector<int> sample{0, 1};
    EXPECT_FALSE(check_preorder<int>(random_cmp, std::span<const int>(sample)));
}

TEST(CheckPreorder, PairOrderOnThreePairs) {
    using P = std::pair<int, int>;
    const std::vector<P> sample{{1, 0}, {1, 1}, {2, 0}};
    const auto cmp = [](const P& a, const P& b) { return pair_compare(a, b); };
    int triples = 0;
    ASSERT_TRUE(brute_force_preorder(sample, cmp, triples));
    EXPECT_EQ(triples, 27);
    EXPECT_TRUE(check_preorder<P>(cmp, std::span<const P>(sample)));
}

TEST(CheckPreorder, EmptySampleViolatesPrecondition) {
    const std::vector<int> sample;
    EXPECT_THROW(check_preorder<int>(int_compare, std::span<const int>(sample)), precondition_error);
}

TEST(CheckPreorder, DetectsIntransitiveCompare) {
    // rock-paper-scissors: antisymmetric and reflexive but not transitive
    const auto rps = [](int a, int b) {
        if (a == b) {
            return 0;
        }
        return (a + 1) % 3 == b ? -1 : 1;
    };
    const std::vector<int> sample{0, 1, 2};
    EXPECT_FALSE(check_preorder<int>(rps, std::span<const int>(sample)));
    int triples = 0;
    EXPECT_FALSE(brute_force_preorder(sample, rps, triples));
}

TEST(CheckPreorder, CoarsePreorderIsAccepted) {
    // compare by parity only: many distinct values compare equal
    const auto parity = [](int a, int b) { return (a % 2) - (b % 2); };
    const std::vector<int> sample{0, 1, 2, 3, 4};
    EXPECT_TRUE(check_preorder<int>(parity, std::span<const int>(sample)));
}

TEST(PairCompare, Examples) {
    EXPECT_EQ(pair_compare(std::pair{1, 5}, std::pair{1, 5}), 0);
    EXPECT_LT(pair_compare(std::pair{1, 9}, std::pair{2, 0}), 0);
    EXPECT_LT(pair_compare(std::pair{3, 1}, std::pair{3, 2}), 0);
    EXPECT_GT(pair_compare(std::pair{3, 2}, std::pair{3, 1}), 0);
}

TEST(PairCompare, OnlySignMatters) {
    struct Wide {
        static int compare(int a, int b) { return (a - b) * 1000; }
        static int default_value() { return 0; }
    };
    EXPECT_LT((PairOrder<Wide, Wide>::compare(std::pair{1, 0}, std::pair{2, 0})), 0);
    EXPECT_EQ((PairOrder<Wide, Wide>::compare(std::pair{4, 4}, std::pair{4, 4})), 0);
}

TEST(ShippedTraits, IntegersPassOnRandomSamples) {
    oracle::Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        std::vector<int> sample;
        const auto size = 1 + rng.below(32);
        for (std::uint64_t i = 0; i < size; ++i) {
            sample.push_back(static_cast<int>(rng.below(40)) - 20);
        }
        ASSERT_TRUE(check_comparable<DefaultComparable<int>>(std::span<const int>(sample)));
    }
}

TEST(ShippedTraits, StringsPassOnRandomSamples) {
    oracle::Rng rng(12);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::string> sample;
        const auto size = 1 + rng.below(32);
        for (std::uint64_t i = 0; i < size; ++i) {
            std::string s;
            const auto len = rng.below(4);
            for (std::uint64_t k = 0; k < len; ++k) {
                s.push_back(static_cast<char>('a' + rng.below(3)));
            }
            sample.push_back(s);
        }
        ASSERT_TRUE(check_comparable<DefaultComparable<std::string>>(std::span<const std::string>(sample)));
    }
}

TEST(ShippedTraits, EqualImpliesSameHashOnManyPairs) {
    oracle::Rng rng(13);
    using IT = DefaultComparable<int>;
    using ST = DefaultComparable<std::string>;
    int equal_pairs = 0;
    for (int i = 0; i < 10000; ++i) {
        const int a = static_cast<int>(rng.below(64));
        const int b = static_cast<int>(rng.below(64));
        if (IT::equal(a, b)) {
            ++equal_pairs;
            ASSERT_EQ(IT::hash(a), IT::hash(b));
        }
        const std::string s = std::to_string(rng.below(64));
        const std::string t = std::to_string(rng.below(64));
        if (ST::equal(s, t)) {
            ASSERT_EQ(ST::hash(s), ST::hash(t));
        }
    }
    EXPECT_GT(equal_pairs, 0);
}

TEST(ShippedTraits, BrokenHashIsDetected) {
    std::vector<int> sample{1, 1, 2};
    int calls = 0;
    const auto eq = [](int a, int b) { return a == b; };
    const auto bad_hash = [&](int) { return static_cast<std::size_t>(calls++); };
    EXPECT_FALSE(check_hash_consistent<int>(eq, bad_hash, std::span<const int>(sample)));
}

// Property: the lexicographic pair order is a pre-order whenever both
// component orders are. Component orders are random coarsenings of the
// integers 0..5 (compare on a random key table).
struct RandomVertexOrder {
    static inline std::vector<int> key;
    static int compare(int a, int b) { return key[a] - key[b]; }
};
struct RandomLabelOrder {
    static inline std::vector<int> key;
    static int compare(int a, int b) { return key[a] - key[b]; }
    static int default_value() { return 0; }
};

TEST(PairOrderProperty, PreorderFromRandomComponentOrders) {
    using P = std::pair<int, int>;
    oracle::Rng rng(21);
    for (int round = 0; round < 200; ++round) {
        RandomVertexOrder::key.assign(6, 0);
        RandomLabelOrder::key.assign(6, 0);
        for (auto& k : RandomVertexOrder::key) {
            k = static_cast<int>(rng.below(4));
        }
        for (auto& k : RandomLabelOrder::key) {
            k = static_cast<int>(rng.below(4));
        }
        const std::vector<int> comp{0, 1, 2, 3, 4, 5};
        ASSERT_TRUE(check_preorder<int>(RandomVertexOrder::compare, std::span<const int>(comp)));
        ASSERT_TRUE(check_preorder<int>(RandomLabelOrder::compare, std::span<const int>(comp)));

        std::vector<P> sample;
        for (int i = 0; i < 10; ++i) {
            sample.emplace_back(static_cast<int>(rng.below(6)), static_cast<int>(rng.below(6)));
        }
        const auto pcmp = [](const P& a, const P& b) {
            return PairOrder<RandomVertexOrder, RandomLabelOrder>::compare(a, b);
        };
        ASSERT_TRUE(check_preorder<P>(pcmp, std::span<const P>(sample)));
    }
}
