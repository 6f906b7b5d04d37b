#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "intalg/cones.hpp"
#include "oracles.hpp"

using namespace intalg;

TEST(SigmaGenerators, OneVariable) {
    const auto pv = sigma_generators(validate_and_order({3}, {2}));
    EXPECT_EQ(pv.all(), (std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {-3, 0, 1}, {0, -2, 1}}));
    const auto one = sigma_generators(validate_and_order({1}, {1}));
    EXPECT_EQ(one.all(), (std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST(SigmaGenerators, TwoVariablesArePrimitive) {
    const auto all = sigma_generators(validate_and_order({5, 2}, {3, 2})).all();
    ASSERT_EQ(all.size(), 6u);
    EXPECT_NE(std::find(all.begin(), all.end(), IntVector{-5, 0, 1, 0}), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), IntVector{0, -2, 0, 1}), all.end());
    for (const auto& v : all) {
        std::int64_t g = 0;
        for (auto x : v) g = std::gcd(g, x);
        EXPECT_EQ(g, 1);
    }
}

TEST(DualGenerators, OneVariable) {
    const auto dg = dual_generators(validate_and_order({3}, {2}));
    EXPECT_EQ(dg.coordinate_rays, (std::vector<IntVector>{{0, 0, 1}}));
    ASSERT_EQ(dg.w.size(), 3u);
    EXPECT_EQ(dg.w[0], (RatVector{1, 0, 3}));
    EXPECT_EQ(dg.w[1], (RatVector{1, Rational(3, 2), 3}));
    EXPECT_EQ(dg.w[2], (RatVector{0, 1, 2}));
    EXPECT_EQ(dg.primitive_w()[1], (IntVector{2, 3, 6}));
    EXPECT_EQ(dual_generators(validate_and_order({4}, {4})).w[1], (RatVector{1, 1, 4}));
}

TEST(DualGenerators, TwoVariables) {
    const auto dg = dual_generators(validate_and_order({5, 2}, {3, 2}));
    EXPECT_EQ(dg.w[1], (RatVector{1, Rational(5, 3), 5, Rational(10, 3)}));
    EXPECT_EQ(dg.w[2], (RatVector{1, 1, 5, 2}));
}

TEST(Duality, HoldsForAssortedPairs) {
    for (auto [a, b] : std::vector<std::pair<IntVector, IntVector>>{
             {{3}, {2}}, {{1}, {1}}, {{5, 2}, {3, 2}}, {{6, 3}, {2, 1}}, {{4, 1, 3}, {1, 2, 3}}, {{2, 7}, {5, 1}}}) {
        const auto r = verify_duality(validate_and_order(a, b));
        EXPECT_TRUE(r.ok) << r.certificate;
    }
}

TEST(Duality, PerturbedGeneratorIsRejected) {
    const auto pair = validate_and_order({3}, {2});
    auto dg = dual_generators(pair);
    dg.w[1][1] += 1;  // lambda_1 -> lambda_1 + 1
    const auto r = verify_duality(pair, dg);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.certificate.empty());
}

TEST(Semigroup, Membership) {
    const auto p = validate_and_order({3}, {2});
    EXPECT_TRUE(semigroup_contains(p, IntVector{1, 1, 3}));
    EXPECT_FALSE(semigroup_contains(p, IntVector{1, 1, 2}));
    EXPECT_FALSE(semigroup_contains(p, IntVector{-1, 0, 5}));
    for (const auto& g : generator_set(p).all()) EXPECT_TRUE(semigroup_contains(p, g));
}

TEST(Semigroup, GroupWitnesses) {
    for (auto [a, b] : std::vector<std::pair<IntVector, IntVector>>{{{3}, {2}}, {{5, 2}, {3, 2}}, {{1, 4, 2}, {3, 1, 2}}}) {
        const auto pair = validate_and_order(a, b);
        const auto w = group_witnesses(pair);
        ASSERT_EQ(w.size(), pair.n() + 2);
        for (std::size_t k = 0; k < w.size(); ++k) {
            EXPECT_TRUE(semigroup_contains(pair, w[k].first));
            EXPECT_TRUE(semigroup_contains(pair, w[k].second));
            for (std::size_t j = 0; j < w[k].first.size(); ++j)
                EXPECT_EQ(w[k].first[j] - w[k].second[j], j == k ? 1 : 0);
        }
    }
}

TEST(Semigroup, ClosedUnderAddition) {
    std::mt19937_64 rng(3);
    const auto pair = validate_and_order({5, 2}, {3, 2});
    const auto pts = oracle::members(pair.a, pair.b, 2, 10);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& p = pts[pick(rng)];
        const auto& q = pts[pick(rng)];
        IntVector s(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) s[k] = p[k] + q[k];
        EXPECT_TRUE(semigroup_contains(pair, s));
    }
}

TEST(Semigroup, GeneratorSetSuffices) {
    // Every member with r + s <= 6 is an N-combination of G and e_3..e_{n+2}:
    // decompose greedily by dynamic programming over the bounded box.
    for (auto [a, b] : std::vector<std::pair<IntVector, IntVector>>{{{3}, {2}}, {{2, 1}, {1, 2}}, {{5}, {2}}}) {
        const auto pair = validate_and_order(a, b);
        const auto gens = generator_set(pair).all();
        std::int64_t tmax = 0;
        for (std::size_t i = 0; i < pair.n(); ++i) tmax = std::max(tmax, 6 * std::max(pair.a[i], pair.b[i]));
        auto pts = oracle::members(pair.a, pair.b, 6, tmax);
        std::erase_if(pts, [](const auto& p) { return p[0] + p[1] > 6; });
        std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
            return std::accumulate(x.begin(), x.end(), 0LL) < std::accumulate(y.begin(), y.end(), 0LL);
        });
        std::set<IntVector> reach{IntVector(pair.n() + 2, 0)};
        for (const auto& p : pts) {
            for (const auto& g : gens) {
                IntVector rest(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) rest[k] = p[k] - g[k];
                if (reach.count(rest)) {
                    reach.insert(p);
                    break;
                }
            }
            EXPECT_TRUE(reach.count(p));
        }
    }
}

TEST(Semigroup, GeneratorsAreExactlyTheMinimalGenerators) {
    for (auto [a, b] : std::vector<std::pair<IntVector, IntVector>>{{{3}, {2}}, {{1}, {1}}, {{2, 1}, {1, 2}}}) {
        const auto pair = validate_and_order(a, b);
        const auto gens = generator_set(pair).all();
        const std::set<IntVector> mine(gens.begin(), gens.end());
        const auto brute = oracle::semigroup_irreducibles(pair.a, pair.b, 3, 9);
        EXPECT_EQ(mine, brute);
    }
}
