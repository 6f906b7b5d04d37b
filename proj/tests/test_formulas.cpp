#include <gtest/gtest.h>

#include "intalg/formulas.hpp"
#include "intalg/invariants.hpp"
#include "oracles.hpp"

using namespace intalg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

std::vector<IntVector> sorted_vectors(std::size_t n, std::int64_t max) {
    std::vector<IntVector> out;
    IntVector v(n, 1);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t hi) {
        if (k == n) {
            out.push_back(v);
            return;
        }
        for (std::int64_t x = 1; x <= hi; ++x) {
            v[k] = x;
            rec(k + 1, x);
        }
    };
    rec(0, max);
    return out;
}

IntVector times(std::int64_t k, IntVector b) {
    for (auto& x : b) x *= k;
    return b;
}

}  // namespace

TEST(SymPoly, Examples) {
    const IntVector v{3, 2, 2};
    EXPECT_EQ(sym_poly(v).values(), (std::vector<Integer>{1, 7, 16, 12}));
    EXPECT_EQ(sym_poly(v)(-1), 0);
    EXPECT_EQ(sym_poly(v)(4), 0);
    EXPECT_EQ(sym_poly(IntVector{}).values(), std::vector<Integer>{1});
}

TEST(Integrals, KnownValues) {
    EXPECT_EQ(integral_A(IntVector{2}), make_rational(1, 8));
    EXPECT_EQ(integral_B(IntVector{1}), make_rational(1, 3));
    EXPECT_EQ(integral_B(IntVector{2}), make_rational(1, 12));
    EXPECT_EQ(integral_A(IntVector{2, 1}), make_rational(5, 48));
    EXPECT_EQ(integral_B(IntVector{2, 1}), make_rational(7, 96));
    EXPECT_EQ(integral_A(IntVector{1, 1}), 0);
}

TEST(Integrals, AgainstDirectPolynomialIntegration) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& b : sorted_vectors(n, 5)) {
            EXPECT_EQ(integral_A(b), oracle::integral_A_direct(b));
            EXPECT_EQ(integral_B(b), oracle::integral_B_direct(b));
        }
}

TEST(Integrals, FullSymmetricSumIdentity) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& b : sorted_vectors(n, 6)) {
            if (b[0] < 2) continue;
            const Rational b1 = to_integer(b[0]);
            EXPECT_EQ(full_symmetric_sum(b), b1 / (b1 - 1) * integral_A(b));
        }
}

TEST(Integrals, RejectUnsortedOrNonPositive) {
    EXPECT_EQ(code_of([] { integral_A(IntVector{1, 2}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { integral_B(IntVector{2, 0}); }), ErrorCode::NonPositiveEntry);
}

TEST(FSignatureN1, Values) {
    EXPECT_EQ(f_signature_formula_n1(3, 2), make_rational(11, 36));
    EXPECT_EQ(f_signature_formula_n1(5, 2), make_rational(11, 60));
    EXPECT_EQ(f_signature_formula_n1(1, 1), make_rational(2, 3));
    EXPECT_EQ(f_signature_formula_n1(11, 2), make_rational(1, 12));
    EXPECT_EQ(code_of([] { f_signature_formula_n1(2, 3); }), ErrorCode::CaseNotCovered);
}

TEST(FSignatureN1, AgainstVolumeAndIntegration) {
    for (std::int64_t a = 1; a <= 7; ++a)
        for (std::int64_t b = 1; b <= a; ++b) {
            const auto f = f_signature_formula_n1(a, b);
            EXPECT_EQ(f, f_signature_exact(validate_and_order({a}, {b}))) << a << "," << b;
            EXPECT_EQ(f, oracle::f_signature_by_integration({a}, {b}));
            // symmetric under swapping the ideals
            EXPECT_EQ(f, f_signature_exact(validate_and_order({b}, {a})));
        }
}

TEST(FSignatureKb, Values) {
    EXPECT_EQ(f_signature_formula_kb(1, IntVector{2, 1}), make_rational(17, 48));
    EXPECT_EQ(f_signature_formula_kb(1, IntVector{1}), make_rational(2, 3));
    EXPECT_EQ(f_signature_formula_kb(2, IntVector{1}), make_rational(5, 12));
}

TEST(FSignatureKb, AgreesWithTheOneVariableFormula) {
    for (std::int64_t k = 1; k <= 6; ++k)
        for (std::int64_t b = 1; b <= 6; ++b)
            EXPECT_EQ(f_signature_formula_kb(k, IntVector{b}), f_signature_formula_n1(k * b, b)) << k << "," << b;
}

TEST(FSignatureKb, AgainstVolume) {
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& b : sorted_vectors(n, 3))
            for (std::int64_t k = 1; k <= 3; ++k) {
                const auto pair = validate_and_order(times(k, b), b);
                EXPECT_EQ(f_signature_formula_kb(k, b), f_signature_exact(pair));
            }
}

TEST(FSignatureKb, AEqualsBIsTwiceAPlusB) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& b : sorted_vectors(n, 4))
            EXPECT_EQ(f_signature_formula_kb(1, b), 2 * (integral_A(b) + integral_B(b)));
}

TEST(FSignatureKb, TwoVariableClosedForm) {
    // s(B(b, b)) for n = 2 is (6 b1^2 - 2 b1 - 2 b1 b2 + b2) / (6 b1^3).
    for (std::int64_t b1 = 1; b1 <= 6; ++b1)
        for (std::int64_t b2 = 1; b2 <= b1; ++b2) {
            const Integer x = to_integer(b1), y = to_integer(b2);
            const Rational expect = ratio(6 * x * x - 2 * x - 2 * x * y + y, 6 * x * x * x);
            EXPECT_EQ(f_signature_formula_kb(1, IntVector{b1, b2}), expect) << b1 << "," << b2;
            EXPECT_EQ(2 * (oracle::integral_A_direct({b1, b2}) + oracle::integral_B_direct({b1, b2})), expect);
        }
}

TEST(FSignatureKb, OneVariableAEqualsB) {
    for (std::int64_t b = 1; b <= 6; ++b) {
        const Integer x = to_integer(b);
        EXPECT_EQ(f_signature_formula_kb(1, IntVector{b}), ratio(3 * x - 1, 3 * x * x));
    }
}

TEST(HilbertKunz, AEqualsB) {
    EXPECT_EQ(hk_formula_a_eq_b(IntVector{1}), make_rational(4, 3));
    EXPECT_EQ(hk_formula_a_eq_b(IntVector{2}), make_rational(19, 12));
    EXPECT_EQ(hk_formula_a_eq_b(IntVector{1, 2}), 2 - make_rational(17, 48));
}

TEST(HilbertKunz, KbFamily) {
    EXPECT_EQ(hk_formula_kb(2, 2), make_rational(33, 16));
    EXPECT_EQ(hk_formula_kb(1, 1), make_rational(4, 3));
    EXPECT_EQ(hk_formula_kb(2, 1), make_rational(7, 4));
    // k = 1 reduces to the a = b formula
    for (std::int64_t b = 1; b <= 8; ++b) EXPECT_EQ(hk_formula_kb(1, b), hk_formula_a_eq_b(IntVector{b}));
}

TEST(HilbertKunz, KbAgainstIntegration) {
    for (std::int64_t k = 1; k <= 3; ++k)
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto pair = validate_and_order({k * b}, {b});
            const auto region = hilbert_kunz_region(pair);
            EXPECT_EQ(hk_formula_kb(k, b), oracle::hilbert_kunz_by_integration(k * b, b, region.translates, region.box));
        }
}

TEST(HilbertKunz, Scroll) {
    EXPECT_EQ(hk_scroll(1), make_rational(4, 3));
    EXPECT_EQ(hk_scroll(2), make_rational(7, 4));
    EXPECT_EQ(hk_scroll(3), make_rational(20, 9));
    for (std::int64_t a = 1; a <= 8; ++a) EXPECT_EQ(hk_scroll(a), hk_formula_kb(a, 1));
    EXPECT_EQ(code_of([] { hk_scroll(0); }), ErrorCode::InvalidArgument);
}

TEST(HilbertKunz, AEqualsBAgainstVolume) {
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& a : sorted_vectors(n, 3))
            EXPECT_EQ(hk_formula_a_eq_b(a), hilbert_kunz_exact(validate_and_order(a, a)));
}
