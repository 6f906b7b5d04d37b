#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "intalg/fan_hilbert.hpp"
#include "intalg/cones.hpp"
#include "oracles.hpp"

using namespace intalg;

namespace {

std::vector<HilbertPoint> pts(std::initializer_list<std::pair<int, int>> l) {
    std::vector<HilbertPoint> out;
    for (auto [r, s] : l) out.push_back({r, s});
    return out;
}

std::vector<HilbertPoint> sorted(std::vector<HilbertPoint> v) {
    std::sort(v.begin(), v.end());
    return v;
}

oracle::P2 to_p2(HilbertPoint p) { return {p.r, p.s}; }

}  // namespace

TEST(ValidateAndOrder, SortsByDecreasingRatio) {
    const auto p = validate_and_order({2, 5}, {2, 3});
    EXPECT_EQ(p.a, (IntVector{5, 2}));
    EXPECT_EQ(p.b, (IntVector{3, 2}));
    EXPECT_EQ(p.permutation, (std::vector<std::size_t>{1, 0}));
    EXPECT_TRUE(p.nondegenerate);
}

TEST(ValidateAndOrder, SingleRatio) {
    const auto p = validate_and_order({4}, {4});
    EXPECT_EQ(p.a, IntVector{4});
    EXPECT_TRUE(p.nondegenerate);
}

TEST(ValidateAndOrder, TiedRatiosAreStableAndDegenerate) {
    const auto p = validate_and_order({6, 3}, {2, 1});
    EXPECT_EQ(p.a, (IntVector{6, 3}));
    EXPECT_EQ(p.permutation, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(p.nondegenerate);
}

TEST(ValidateAndOrder, ZeroEntriesUseInfiniteRatio) {
    const auto p = validate_and_order({0, 1, 2}, {1, 0, 1});
    EXPECT_EQ(p.a, (IntVector{1, 2, 0}));
    EXPECT_EQ(p.b, (IntVector{0, 1, 1}));
    // a_1/b_1 = inf ties with the sentinel 1/0
    EXPECT_FALSE(p.nondegenerate);
}

TEST(ValidateAndOrder, Errors) {
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code([] { validate_and_order({1, 2}, {1}); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code([] { validate_and_order({}, {}); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code([] { validate_and_order({1, -2}, {1, 1}); }), ErrorCode::NegativeEntry);
    EXPECT_EQ(code([] { validate_and_order({1, 0}, {1, 0}); }), ErrorCode::DoublyZeroIndex);
}

TEST(ReduceDegenerate, PolynomialRingOnly) {
    const auto r = reduce_degenerate({2, 0}, {0, 3});
    EXPECT_TRUE(r.polynomial_ring_only);
    EXPECT_FALSE(r.core.has_value());
    EXPECT_EQ(r.adjoined_variables, (std::vector<std::size_t>{0, 1}));
    // brute force: Q has exactly n + 2 = 4 minimal generators, so B is a polynomial ring
    const auto irr = oracle::semigroup_irreducibles({2, 0}, {0, 3}, 3, 9);
    EXPECT_EQ(irr, (std::set<oracle::Vec>{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 2, 0}, {0, 1, 0, 3}}));
}

TEST(ReduceDegenerate, PositivePairIsItsOwnCore) {
    const auto r = reduce_degenerate({3, 2}, {2, 2});
    ASSERT_TRUE(r.core.has_value());
    EXPECT_EQ(r.core->a, (IntVector{3, 2}));
    EXPECT_TRUE(r.adjoined_variables.empty());
}

TEST(ReduceDegenerate, MixedPairSplitsOffVariables) {
    const auto r = reduce_degenerate({5, 1, 0}, {0, 2, 3});
    ASSERT_TRUE(r.core.has_value());
    EXPECT_EQ(r.core->a, IntVector{1});
    EXPECT_EQ(r.core->b, IntVector{2});
    EXPECT_EQ(r.adjoined_variables, (std::vector<std::size_t>{0, 2}));
    // brute force: the number of minimal generators of Q(a, b) equals
    // nu(core) + number of adjoined variables = (1 + h) + 2
    const auto h = hilbert_set(*r.core).h();
    const auto irr = oracle::semigroup_irreducibles({5, 1, 0}, {0, 2, 3}, 2, 10);
    EXPECT_EQ(irr.size(), 1 + h + 2);
}

TEST(HilbertBasisCone, UnimodularCone) {
    EXPECT_EQ(sorted(hilbert_basis_cone({1, 0}, {0, 1})), sorted(pts({{1, 0}, {0, 1}})));
}

TEST(HilbertBasisCone, MatchesBruteForce) {
    const auto basis = hilbert_basis_cone({1, 0}, {2, 3});
    EXPECT_EQ(sorted(basis), sorted(pts({{1, 0}, {1, 1}, {2, 3}})));
    const auto brute = oracle::irreducibles({1, 0}, {2, 3}, 6);
    std::set<oracle::P2> got;
    for (auto p : basis) got.insert(to_p2(p));
    EXPECT_EQ(got, brute);
    std::vector<oracle::P2> gens;
    for (auto p : basis) gens.push_back(to_p2(p));
    EXPECT_TRUE(oracle::generates({1, 0}, {2, 3}, gens, 12));
}

TEST(HilbertBasisCone, MiddleSegmentOfTwoVariableExample) {
    EXPECT_EQ(sorted(hilbert_basis_cone({2, 5}, {3, 2})), sorted(pts({{1, 1}, {1, 2}, {2, 5}, {3, 2}})));
}

TEST(HilbertBasisCone, NonPrimitiveAndParallelGenerators) {
    EXPECT_EQ(sorted(hilbert_basis_cone({2, 0}, {0, 4})), sorted(pts({{1, 0}, {0, 1}})));
    EXPECT_EQ(hilbert_basis_cone({2, 2}, {3, 3}), pts({{1, 1}}));
    try {
        hilbert_basis_cone({0, 0}, {1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroGenerator);
    }
}

TEST(HilbertSet, ThreeTwo) {
    const auto hs = hilbert_set(validate_and_order({3}, {2}));
    EXPECT_EQ(hs.merged, pts({{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}}));
    EXPECT_EQ(hs.h(), 5u);
}

TEST(HilbertSet, EqualExponents) {
    for (std::int64_t a = 1; a <= 6; ++a) {
        const auto hs = hilbert_set(validate_and_order({a}, {a}));
        EXPECT_EQ(hs.merged, pts({{1, 0}, {1, 1}, {0, 1}}));
    }
}

TEST(HilbertSet, MultipleFamily) {
    for (std::int64_t k = 1; k <= 5; ++k)
        for (std::int64_t b = 1; b <= 4; ++b) {
            const auto hs = hilbert_set(validate_and_order({k * b}, {b}));
            std::vector<HilbertPoint> expect{{1, 0}};
            for (std::int64_t j = 1; j <= k; ++j) expect.push_back({1, j});
            expect.push_back({0, 1});
            EXPECT_EQ(hs.merged, expect) << "k=" << k << " b=" << b;
        }
}

TEST(HilbertSet, TwoVariableExampleAsPrinted) {
    // a = (5,2), b = (3,2): segment cones through the fan rays (3,5) and (1,1)
    const auto hs = hilbert_set(validate_and_order({5, 2}, {3, 2}));
    ASSERT_EQ(hs.segments.size(), 3u);
    EXPECT_EQ(sorted(hs.segments[0]), sorted(pts({{0, 1}, {1, 2}, {3, 5}})));
    EXPECT_EQ(sorted(hs.segments[1]), sorted(pts({{3, 5}, {2, 3}, {1, 1}})));
    EXPECT_EQ(sorted(hs.segments[2]), sorted(pts({{1, 1}, {1, 0}})));
    EXPECT_EQ(hs.h(), 6u);
}

TEST(HilbertSet, TwoVariableExampleMatchingTheIdeals) {
    // I = (x^5 y^2), J = (x^2 y^3) gives a = (5,2), b = (2,3)
    const auto hs = hilbert_set(validate_and_order({5, 2}, {2, 3}));
    ASSERT_EQ(hs.segments.size(), 3u);
    EXPECT_EQ(sorted(hs.segments[0]), sorted(pts({{0, 1}, {1, 3}, {2, 5}})));
    EXPECT_EQ(sorted(hs.segments[1]), sorted(pts({{1, 1}, {1, 2}, {2, 5}, {3, 2}})));
    EXPECT_EQ(sorted(hs.segments[2]), sorted(pts({{1, 0}, {2, 1}, {3, 2}})));
    EXPECT_EQ(hs.h(), 8u);
    EXPECT_EQ(embedding_dimension(validate_and_order({5, 2}, {2, 3})), 10u);
}

TEST(HilbertSet, RequiresPositiveEntries) {
    try {
        hilbert_set(validate_and_order({1, 0}, {1, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPositiveEntry);
    }
}

TEST(TVector, Examples) {
    const auto p = validate_and_order({5, 2}, {3, 2});
    EXPECT_EQ(t_vector({1, 0}, p), (IntVector{5, 2}));
    EXPECT_EQ(t_vector({1, 1}, validate_and_order({3}, {2})), IntVector{3});
    EXPECT_EQ(t_vector({2, 5}, p), (IntVector{15, 10}));
    EXPECT_TRUE(semigroup_contains(p, lift({2, 5}, p)));
    EXPECT_EQ(lift({2, 5}, p), (IntVector{2, 5, 15, 10}));
}

TEST(EmbeddingDimension, Examples) {
    EXPECT_EQ(embedding_dimension(validate_and_order({1}, {1})), 4u);
    EXPECT_EQ(embedding_dimension(validate_and_order({3}, {2})), 6u);
    EXPECT_EQ(embedding_dimension(validate_and_order({5, 2}, {3, 2})), 8u);
}

// ---- properties over random pairs ----

class RandomPairs : public ::testing::Test {
protected:
    std::vector<std::pair<IntVector, IntVector>> pairs;
    void SetUp() override {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::int64_t> entry(1, 6);
        std::uniform_int_distribution<int> len(1, 3);
        for (int t = 0; t < 40; ++t) {
            const int n = len(rng);
            IntVector a, b;
            for (int i = 0; i < n; ++i) {
                a.push_back(entry(rng));
                b.push_back(entry(rng));
            }
            pairs.emplace_back(a, b);
        }
    }
};

TEST_F(RandomPairs, MergedIsCounterclockwiseAndUnimodular) {
    for (const auto& [a, b] : pairs) {
        const auto hs = hilbert_set(validate_and_order(a, b));
        EXPECT_EQ(hs.merged.front(), (HilbertPoint{1, 0}));
        EXPECT_EQ(hs.merged.back(), (HilbertPoint{0, 1}));
        for (std::size_t i = 0; i + 1 < hs.merged.size(); ++i) {
            EXPECT_TRUE(ccw_less(hs.merged[i], hs.merged[i + 1]));
            EXPECT_EQ(std::abs(det2(hs.merged[i], hs.merged[i + 1])), 1);
        }
    }
}

TEST_F(RandomPairs, SegmentsGenerateAndAreIrreducible) {
    for (const auto& [a, b] : pairs) {
        const auto pair = validate_and_order(a, b);
        const auto hs = hilbert_set(pair);
        std::vector<HilbertPoint> rays{{0, 1}};
        for (std::size_t i = 0; i < pair.n(); ++i) rays.push_back(detail::fan_ray(pair.a[i], pair.b[i]));
        rays.push_back({1, 0});
        for (std::size_t i = 0; i < hs.segments.size(); ++i) {
            const auto g1 = to_p2(rays[i]), g2 = to_p2(rays[i + 1]);
            std::vector<oracle::P2> basis;
            for (auto p : hs.segments[i]) basis.push_back(to_p2(p));
            EXPECT_TRUE(oracle::generates(g1, g2, basis, 20));
            const auto irr = oracle::irreducibles(g1, g2, 20);
            for (auto p : basis) EXPECT_TRUE(irr.count(p)) << p.r << "," << p.s;
        }
    }
}

TEST_F(RandomPairs, HilbertNumberCountsSharedRays) {
    for (const auto& [a, b] : pairs) {
        const auto pair = validate_and_order(a, b);
        if (!pair.nondegenerate) continue;
        const auto hs = hilbert_set(pair);
        std::size_t sum = 0;
        for (const auto& s : hs.segments) sum += s.size();
        EXPECT_EQ(hs.h(), sum - pair.n());
    }
}

TEST_F(RandomPairs, InvariantUnderInputPermutation) {
    std::mt19937_64 rng(11);
    for (const auto& [a, b] : pairs) {
        std::vector<std::size_t> idx(a.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        IntVector pa, pb;
        for (auto i : idx) {
            pa.push_back(a[i]);
            pb.push_back(b[i]);
        }
        EXPECT_EQ(hilbert_set(validate_and_order(a, b)).merged, hilbert_set(validate_and_order(pa, pb)).merged);
    }
}
