#pragma once

// Exact scalars and small dense linear algebra over Q.

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intalg/error.hpp"

namespace intalg {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// num / den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q{num, den};
    q.canonicalize();
    return q;
}

/// Canonical "p/q" text. The denominator is always written, so integers
/// come out as "2/1".
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw Error(ErrorCode::InvalidArgument, "not a rational: " + std::string(text));
    }
    if (q.get_den() == 0) {
        throw Error(ErrorCode::InvalidArgument, "zero denominator: " + std::string(text));
    }
    q.canonicalize();
    return q;
}

/// Decimal rendering with the given number of significant digits.
inline std::string to_decimal_string(const Rational& q, int digits = 15) {
    mpf_class f(0, 256);
    f = q;
    // gmp_snprintf understands %Fg for mpf_t.
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
    return buf;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline RatVector to_rational(std::span<const std::int64_t> v) {
    RatVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(to_integer(x));
    return out;
}

inline Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

namespace linalg {

/// Row-reduces `m` in place to reduced row echelon form and returns the
/// pivot column of each nonzero row.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    return rref(m, m.front().size()).size();
}

/// Unique solution of the square system A x = rhs, or nullopt when A is singular.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& rhs) {
    const std::size_t n = a.size();
    RatMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].push_back(rhs[i]);
    }
    auto piv = rref(aug, n);
    if (piv.size() < n) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

/// Basis of { x : A x = 0 } where A has `cols` columns.
inline RatMatrix nullspace(RatMatrix a, std::size_t cols) {
    auto piv = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace linalg
}  // namespace intalg
