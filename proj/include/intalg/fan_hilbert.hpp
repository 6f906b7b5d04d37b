#pragma once

// Exponent vectors of B(a, b), their fan ordering, and the Hilbert set of
// the planar fan they cut out of the first quadrant.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intalg/error.hpp"
#include "intalg/rational.hpp"

namespace intalg {

/// Largest accepted exponent. Keeps every intermediate product of the
/// planar algorithms comfortably inside 64 bits.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 20;

struct ExponentPair {
    IntVector a;
    IntVector b;
    /// permutation[i] is the input index that landed at ordered position i.
    std::vector<std::size_t> permutation;
    bool nondegenerate = false;

    std::size_t n() const { return a.size(); }
    bool all_positive() const {
        return std::all_of(a.begin(), a.end(), [](auto x) { return x > 0; }) &&
               std::all_of(b.begin(), b.end(), [](auto x) { return x > 0; });
    }
    bool operator==(const ExponentPair&) const = default;
};

struct HilbertPoint {
    std::int64_t r = 0;
    std::int64_t s = 0;

    auto operator<=>(const HilbertPoint&) const = default;
};

inline HilbertPoint operator+(HilbertPoint x, HilbertPoint y) { return {x.r + y.r, x.s + y.s}; }
inline HilbertPoint operator-(HilbertPoint x, HilbertPoint y) { return {x.r - y.r, x.s - y.s}; }

inline std::int64_t det2(HilbertPoint x, HilbertPoint y) { return x.r * y.s - x.s * y.r; }

/// Strict counterclockwise order of nonzero first-quadrant points: by slope s/r,
/// with (0, 1) last.
inline bool ccw_less(HilbertPoint x, HilbertPoint y) { return det2(x, y) > 0; }

struct HilbertSet {
    /// segments[i] is the Hilbert basis of Cone((b_i, a_i), (b_{i+1}, a_{i+1}))
    /// with sentinels (b_0, a_0) = (0, 1) and (b_{n+1}, a_{n+1}) = (1, 0).
    std::vector<std::vector<HilbertPoint>> segments;
    /// Union of the segments in counterclockwise order, (1,0) first and (0,1) last.
    std::vector<HilbertPoint> merged;

    std::size_t h() const { return merged.size(); }
};

namespace detail {

// a_i / b_i > a_j / b_j with k/0 = infinity; never called with a doubly zero pair.
inline bool ratio_greater(std::int64_t ai, std::int64_t bi, std::int64_t aj, std::int64_t bj) {
    return ai * bj > aj * bi;
}

inline void check_shape(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorCode::LengthMismatch,
                    "exponent vectors must have the same positive length (got " +
                        std::to_string(a.size()) + " and " + std::to_string(b.size()) + ")");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0) {
            throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(i) + " is negative");
        }
        if (a[i] > kMaxExponent || b[i] > kMaxExponent) {
            throw Error(ErrorCode::InvalidArgument, "entry " + std::to_string(i) + " is too large");
        }
    }
}

inline HilbertPoint primitive(HilbertPoint g) {
    const auto d = std::gcd(g.r, g.s);
    return {g.r / d, g.s / d};
}

// Ray of the fan through the breakpoint a r = b s of t_i = max(a r, b s).
inline HilbertPoint fan_ray(std::int64_t a, std::int64_t b) { return primitive({b, a}); }

}  // namespace detail

/// Sorts the index pairs (a_i, b_i) so that a_i / b_i is non-increasing.
/// The sort is stable, so tied ratios keep their input order.
inline ExponentPair validate_and_order(const IntVector& a, const IntVector& b) {
    detail::check_shape(a, b);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0 && b[i] == 0) {
            throw Error(ErrorCode::DoublyZeroIndex,
                        "a and b both vanish at index " + std::to_string(i) +
                            "; route the input through reduce_degenerate");
        }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
        return detail::ratio_greater(a[i], b[i], a[j], b[j]);
    });

    ExponentPair out;
    out.permutation = perm;
    for (auto i : perm) {
        out.a.push_back(a[i]);
        out.b.push_back(b[i]);
    }
    // Sentinels (1, 0) and (0, 1) bracket the ratios.
    IntVector sa{1}, sb{0};
    sa.insert(sa.end(), out.a.begin(), out.a.end());
    sb.insert(sb.end(), out.b.begin(), out.b.end());
    sa.push_back(0);
    sb.push_back(1);
    out.nondegenerate = true;
    for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
        if (!detail::ratio_greater(sa[i], sb[i], sa[i + 1], sb[i + 1])) {
            out.nondegenerate = false;
            break;
        }
    }
    return out;
}

struct Reduction {
    /// Positive part of the input, fan ordered; absent when B is a polynomial ring.
    std::optional<ExponentPair> core;
    /// Input indices whose variable x_i splits off as a free polynomial variable.
    std::vector<std::size_t> adjoined_variables;
    /// Input indices that make up the core, in input order.
    std::vector<std::size_t> core_indices;
    bool polynomial_ring_only = false;
};

/// Splits off the variables that do not interact with both ideals.
///
/// An index with b_i = 0 contributes x_i^{a_i r} only, which is absorbed into
/// the new generator U = x^{a'} u; likewise a_i = 0 is absorbed into V, and a
/// doubly zero index is a plain polynomial variable. What remains is the pair
/// restricted to the indices where both entries are positive. When nothing
/// remains, B is the polynomial ring in n + 2 variables.
inline Reduction reduce_degenerate(const IntVector& a, const IntVector& b) {
    detail::check_shape(a, b);
    Reduction red;
    IntVector ca, cb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) {
            ca.push_back(a[i]);
            cb.push_back(b[i]);
            red.core_indices.push_back(i);
        } else {
            red.adjoined_variables.push_back(i);
        }
    }
    if (ca.empty()) {
        red.polynomial_ring_only = true;
    } else {
        red.core = validate_and_order(ca, cb);
    }
    return red;
}

/// Hilbert basis of the planar cone spanned by g1 and g2.
///
/// The lattice points of the half-open fundamental parallelogram of the
/// primitive generators, together with the generators, generate the cone
/// monoid. A candidate is reducible exactly when subtracting some other
/// candidate leaves a nonzero cone point, so filtering on that test leaves
/// the minimal generating set. Parallel generators span a ray.
inline std::vector<HilbertPoint> hilbert_basis_cone(HilbertPoint g1, HilbertPoint g2) {
    if ((g1.r == 0 && g1.s == 0) || (g2.r == 0 && g2.s == 0)) {
        throw Error(ErrorCode::ZeroGenerator, "cone generator is zero");
    }
    if (g1.r < 0 || g1.s < 0 || g2.r < 0 || g2.s < 0) {
        throw Error(ErrorCode::NegativeEntry, "cone generators must lie in the first quadrant");
    }
    g1 = detail::primitive(g1);
    g2 = detail::primitive(g2);
    if (ccw_less(g2, g1)) std::swap(g1, g2);
    const std::int64_t det = det2(g1, g2);
    if (det == 0) return {g1};

    // p = l1 g1 + l2 g2 with l1 = det(p, g2) / det and l2 = det(g1, p) / det.
    auto in_cone = [&](HilbertPoint p) { return det2(p, g2) >= 0 && det2(g1, p) >= 0; };

    std::vector<HilbertPoint> candidates{g1, g2};
    const std::int64_t rmax = g1.r + g2.r;
    const std::int64_t smax = g1.s + g2.s;
    for (std::int64_t r = 0; r <= rmax; ++r) {
        for (std::int64_t s = 0; s <= smax; ++s) {
            const HilbertPoint p{r, s};
            const std::int64_t c1 = det2(p, g2);
            const std::int64_t c2 = det2(g1, p);
            if (c1 >= 0 && c1 < det && c2 >= 0 && c2 < det && !(r == 0 && s == 0)) {
                candidates.push_back(p);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), ccw_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<HilbertPoint> basis;
    for (auto p : candidates) {
        bool reducible = false;
        for (auto q : candidates) {
            if (q == p) continue;
            const auto rest = p - q;
            if (rest.r >= 0 && rest.s >= 0 && !(rest.r == 0 && rest.s == 0) && in_cone(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(p);
    }
    return basis;
}

inline HilbertSet hilbert_set(const ExponentPair& pair) {
    if (!pair.all_positive()) {
        throw Error(ErrorCode::NonPositiveEntry,
                    "hilbert_set needs all entries positive; use reduce_degenerate first");
    }
    std::vector<HilbertPoint> rays{{0, 1}};
    for (std::size_t i = 0; i < pair.n(); ++i) rays.push_back(detail::fan_ray(pair.a[i], pair.b[i]));
    rays.push_back({1, 0});

    HilbertSet hs;
    std::vector<HilbertPoint> all;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        auto seg = hilbert_basis_cone(rays[i], rays[i + 1]);
        all.insert(all.end(), seg.begin(), seg.end());
        hs.segments.push_back(std::move(seg));
    }
    std::sort(all.begin(), all.end(), ccw_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    hs.merged = std::move(all);
    return hs;
}

/// t(v)_i = max(a_i r, b_i s).
inline IntVector t_vector(HilbertPoint v, const ExponentPair& pair) {
    IntVector t(pair.n());
    for (std::size_t i = 0; i < pair.n(); ++i) t[i] = std::max(pair.a[i] * v.r, pair.b[i] * v.s);
    return t;
}

/// The lift u(v) = (r, s, t(v)) in Z^{n+2}.
inline IntVector lift(HilbertPoint v, const ExponentPair& pair) {
    IntVector u{v.r, v.s};
    auto t = t_vector(v, pair);
    u.insert(u.end(), t.begin(), t.end());
    return u;
}

struct GeneratorSet {
    /// (v, t(v)) for v in the merged Hilbert set, in counterclockwise order.
    std::vector<IntVector> generators;
    /// e_3 .. e_{n+2}, the exponent vectors of x_1 .. x_n.
    std::vector<IntVector> coordinate;

    std::vector<IntVector> all() const {
        auto out = generators;
        out.insert(out.end(), coordinate.begin(), coordinate.end());
        return out;
    }
};

inline GeneratorSet generator_set(const ExponentPair& pair, const HilbertSet& hs) {
    GeneratorSet g;
    for (auto v : hs.merged) g.generators.push_back(lift(v, pair));
    for (std::size_t i = 0; i < pair.n(); ++i) {
        IntVector e(pair.n() + 2, 0);
        e[i + 2] = 1;
        g.coordinate.push_back(std::move(e));
    }
    return g;
}

inline GeneratorSet generator_set(const ExponentPair& pair) { return generator_set(pair, hilbert_set(pair)); }

inline std::size_t embedding_dimension(const ExponentPair& pair, const HilbertSet& hs) {
    return pair.n() + hs.h();
}

inline std::size_t embedding_dimension(const ExponentPair& pair) {
    return embedding_dimension(pair, hilbert_set(pair));
}

}  // namespace intalg
