#include <gtest/gtest.h>

#include <random>

#include "intalg/invariants.hpp"
#include "oracles.hpp"

using namespace intalg;

namespace {

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m) {
    IntMatrix out;
    for (const auto& row : m) {
        std::vector<Integer> r;
        for (auto x : row) r.push_back(to_integer(x));
        out.push_back(std::move(r));
    }
    return out;
}

// d_1 ... d_k = gcd of the k x k minors.
void expect_matches_minors(const std::vector<std::vector<std::int64_t>>& m) {
    const auto snf = smith_normal_form(to_int_matrix(m));
    Integer prefix = 1;
    const std::size_t kmax = std::min(m.size(), m[0].size());
    for (std::size_t k = 1; k <= kmax; ++k) {
        const auto g = oracle::gcd_of_minors(m, k);
        if (k <= snf.rank()) {
            prefix *= snf.invariant_factors[k - 1];
            EXPECT_EQ(prefix, g) << "k = " << k;
        } else {
            EXPECT_EQ(g, 0) << "k = " << k;
        }
    }
    for (std::size_t i = 1; i < snf.rank(); ++i)
        EXPECT_TRUE(mpz_divisible_p(snf.invariant_factors[i].get_mpz_t(), snf.invariant_factors[i - 1].get_mpz_t()));
}

}  // namespace

TEST(Smith, SmallExamples) {
    const auto snf = smith_normal_form(to_int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    EXPECT_EQ(snf.invariant_factors, (std::vector<Integer>{2, 6, 12}));
    EXPECT_EQ(smith_normal_form(to_int_matrix({{0, 0}, {0, 0}})).rank(), 0u);
    const auto ck = cokernel(smith_normal_form(to_int_matrix({{2, 0}, {0, 3}, {0, 0}})));
    EXPECT_EQ(ck.free_rank, 1u);
    EXPECT_EQ(ck.torsion, (std::vector<Integer>{6}));
}

TEST(Smith, RandomMatricesAgainstMinors) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5), size(1, 4);
    for (int t = 0; t < 60; ++t) {
        std::vector<std::vector<std::int64_t>> m(size(rng), std::vector<std::int64_t>(size(rng)));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        expect_matches_minors(m);
    }
}

TEST(ClassGroup, FreeOfRankN) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(1, 7), len(1, 4);
    for (int t = 0; t < 40; ++t) {
        IntVector a(len(rng)), b;
        for (auto& x : a) x = entry(rng);
        for (std::size_t i = 0; i < a.size(); ++i) b.push_back(entry(rng));
        const auto pair = validate_and_order(a, b);
        const auto cl = class_group(pair);
        EXPECT_EQ(cl.rank, a.size());
        EXPECT_TRUE(cl.torsion_free());
        // all n + 2 invariants equal 1, and the minor gcds agree
        std::vector<std::vector<std::int64_t>> m;
        for (const auto& row : sigma_generators(pair).all()) m.push_back(row);
        EXPECT_EQ(oracle::gcd_of_minors(m, a.size() + 2), 1);
        EXPECT_EQ(cl.smith_invariants, std::vector<Integer>(a.size() + 2, Integer(1)));
    }
}

TEST(QGorenstein, Examples) {
    EXPECT_TRUE(is_q_gorenstein(validate_and_order({2, 3}, {2, 3})));
    EXPECT_FALSE(is_q_gorenstein(validate_and_order({2, 3}, {3, 2})));
    EXPECT_TRUE(is_q_gorenstein(validate_and_order({4}, {4})));
    EXPECT_FALSE(is_q_gorenstein(validate_and_order({3}, {2})));
    EXPECT_FALSE(is_q_gorenstein(validate_and_order({5, 2}, {3, 2})));
}
