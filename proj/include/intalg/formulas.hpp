#pragma once

// Closed-form F-signature and Hilbert-Kunz values, all in exact rationals.

#include <algorithm>
#include <functional>
#include <vector>

#include "intalg/error.hpp"
#include "intalg/rational.hpp"

namespace intalg {

/// Elementary symmetric polynomials S_0..S_n of an integer vector.
/// S_i is 0 outside 0..n.
class SymmetricPolynomials {
public:
    SymmetricPolynomials() : values_{Integer(1)} {}

    /// Adds one variable: S_i <- S_i + x S_{i-1}.
    void push(const Integer& x) {
        values_.push_back(Integer(0));
        for (std::size_t i = values_.size() - 1; i > 0; --i) values_[i] += x * values_[i - 1];
    }

    Integer operator()(long i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= values_.size()) return 0;
        return values_[static_cast<std::size_t>(i)];
    }

    std::size_t degree() const { return values_.size() - 1; }
    const std::vector<Integer>& values() const { return values_; }

private:
    std::vector<Integer> values_;
};

inline SymmetricPolynomials sym_poly(std::span<const std::int64_t> v) {
    SymmetricPolynomials s;
    for (auto x : v) s.push(to_integer(x));
    return s;
}

namespace detail {

inline void require_sorted_positive(std::span<const std::int64_t> b) {
    if (b.empty()) throw Error(ErrorCode::InvalidArgument, "vector must be nonempty");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1) throw Error(ErrorCode::NonPositiveEntry, "entries must be positive");
        if (i > 0 && b[i] > b[i - 1]) throw Error(ErrorCode::InvalidArgument, "vector must be sorted descending");
    }
}

inline Rational power(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace detail

/// A = ∫_0^{1-1/b_1} ∫_0^{1/b_1} prod_i (1 - b_i v) dv du
///   = (1 - 1/b_1) sum_{i=1}^n (-1)^{i-1} S_{i-1}(b_2..b_n) / (i (i+1) b_1^i).
inline Rational integral_A(std::span<const std::int64_t> b) {
    detail::require_sorted_positive(b);
    const std::size_t n = b.size();
    const Rational b1 = to_integer(b[0]);
    const auto tail = sym_poly(b.subspan(1));
    Rational sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational term = Rational(tail(static_cast<long>(i) - 1)) /
                        (Rational(to_integer(static_cast<std::int64_t>(i * (i + 1)))) * detail::power(b1, static_cast<unsigned>(i)));
        sum += (i % 2 == 1) ? term : Rational(-term);
    }
    return (1 - 1 / b1) * sum;
}

/// B = ∫_0^{1/b_1} sum_i (-1)^i S_i(b) u^{i+1}/(i+1) du
///   = 2 sum_{i=1}^n (-1)^{i-1} S_{i-1}(b_2..b_n) / (i (i+1) (i+2) b_1^{i+1}).
inline Rational integral_B(std::span<const std::int64_t> b) {
    detail::require_sorted_positive(b);
    const std::size_t n = b.size();
    const Rational b1 = to_integer(b[0]);
    const auto tail = sym_poly(b.subspan(1));
    Rational sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational term = Rational(tail(static_cast<long>(i) - 1)) /
                        (Rational(to_integer(static_cast<std::int64_t>(i * (i + 1) * (i + 2)))) *
                         detail::power(b1, static_cast<unsigned>(i + 1)));
        sum += (i % 2 == 1) ? term : Rational(-term);
    }
    return 2 * sum;
}

/// sum_{i=0}^n (-1)^i S_i(b) / ((i+1) b_1^{i+1}); equals b_1/(b_1 - 1) * A when b_1 > 1.
inline Rational full_symmetric_sum(std::span<const std::int64_t> b) {
    detail::require_sorted_positive(b);
    const Rational b1 = to_integer(b[0]);
    const auto s = sym_poly(b);
    Rational sum = 0;
    for (std::size_t i = 0; i <= b.size(); ++i) {
        Rational term = Rational(s(static_cast<long>(i))) /
                        (Rational(to_integer(static_cast<std::int64_t>(i + 1))) * detail::power(b1, static_cast<unsigned>(i + 1)));
        sum += (i % 2 == 0) ? term : Rational(-term);
    }
    return sum;
}

/// s(B(a, b)) for n = 1 and a >= b: (6b - 1)/(6ab) when a > b, (3a - 1)/(3a^2) when a = b.
inline Rational f_signature_formula_n1(std::int64_t a, std::int64_t b) {
    if (b < 1) throw Error(ErrorCode::NonPositiveEntry, "b must be positive");
    if (a < b) throw Error(ErrorCode::CaseNotCovered, "n = 1 formula needs a >= b; swap the pair");
    const Integer A = to_integer(a), B = to_integer(b);
    if (a > b) return ratio(6 * B - 1, 6 * A * B);
    return ratio(3 * A - 1, 3 * A * A);
}

/// s(B(k b, b)) for b sorted descending.
inline Rational f_signature_formula_kb(std::int64_t k, std::span<const std::int64_t> b) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    detail::require_sorted_positive(b);
    const Rational K = to_integer(k);
    const Rational A = integral_A(b);
    const Rational B = integral_B(b);
    if (k == 1) return 2 * (A + B);
    if (b[0] >= 2) {
        const Rational b1 = to_integer(b[0]);
        return ((2 * b1 - 1) / (b1 - 1) * A + B) / K;
    }
    const unsigned n = static_cast<unsigned>(b.size());
    Rational alt = 0;
    for (unsigned i = 0; i <= n; ++i) {
        Rational term = Rational(binomial(n, i)) / Rational(to_integer(i + 1));
        alt += (i % 2 == 0) ? term : Rational(-term);
    }
    return (alt + B) / K;
}

/// e_HK(B(a, a)) = 2 - s(B(a, a)).
inline Rational hk_formula_a_eq_b(std::span<const std::int64_t> a) {
    std::vector<std::int64_t> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return 2 - f_signature_formula_kb(1, sorted);
}

/// e_HK(B(kb, b)) = ((k+1) - 6kb + 3k(k+3)b^2) / (6kb^2).
inline Rational hk_formula_kb(std::int64_t k, std::int64_t b) {
    if (k < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "k and b must be positive");
    const Integer K = to_integer(k), B = to_integer(b);
    return ratio((K + 1) - 6 * K * B + 3 * K * (K + 3) * B * B, 6 * K * B * B);
}

/// Hilbert-Kunz multiplicity of the rational normal scroll of multiplicity e = a + 1:
/// e/2 + e/(6a).
inline Rational hk_scroll(std::int64_t a) {
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "a must be positive");
    const Integer A = to_integer(a);
    return ratio(A + 1, 2) + ratio(A + 1, 6 * A);
}

}  // namespace intalg
