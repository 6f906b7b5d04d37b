#pragma once

// Independent volume estimates: hit-or-miss Monte Carlo and scaled lattice
// point counts. Both take a membership predicate and a bounding box.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "intalg/polyvol.hpp"
#include "intalg/region.hpp"

namespace intalg {

struct Box {
    RatVector lo;
    RatVector hi;

    std::size_t dimension() const { return lo.size(); }
    Rational volume() const {
        Rational v = 1;
        for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] - lo[k];
        return v;
    }
};

using RealPredicate = std::function<bool(std::span<const double>)>;
/// Membership of z / m for an integer point z and scale m.
using LatticePredicate = std::function<bool(std::span<const std::int64_t>, std::int64_t)>;

/// Inclusive range of integers; empty when lo > hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};
/// For the first d - 1 coordinates of z (the last is ignored) and scale m: the
/// last coordinates z_d with z / m in the region, as sorted disjoint ranges
/// clipped to [lo, hi].
using LatticeSlicer =
    std::function<std::vector<IntRange>(std::span<const std::int64_t>, std::int64_t, std::int64_t, std::int64_t)>;

struct MonteCarloEstimate {
    double value = 0;
    /// Binomial standard error box_volume * sqrt(p (1 - p) / N).
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

/// Deterministic for a fixed seed: one mt19937_64 stream drawn coordinate by coordinate.
inline MonteCarloEstimate monte_carlo_volume(const RealPredicate& inside, const Box& box, std::uint64_t samples,
                                             std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
    const std::size_t d = box.dimension();
    std::mt19937_64 rng(seed);
    std::vector<std::uniform_real_distribution<double>> coord;
    for (std::size_t k = 0; k < d; ++k) coord.emplace_back(box.lo[k].get_d(), box.hi[k].get_d());
    std::vector<double> x(d);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t k = 0; k < d; ++k) x[k] = coord[k](rng);
        if (inside(x)) ++hits;
    }
    const double vbox = box.volume().get_d();
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloEstimate est;
    est.value = vbox * p;
    est.standard_error = vbox * std::sqrt(p * (1 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.hits = hits;
    return est;
}

namespace detail {

struct ScaledBox {
    std::vector<std::int64_t> lo, hi;
    bool empty = false;
};

inline ScaledBox scaled_box(const Box& box, std::int64_t m) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "lattice scale must be at least 1");
    const std::size_t d = box.dimension();
    const Integer M = to_integer(m);
    ScaledBox out{std::vector<std::int64_t>(d), std::vector<std::int64_t>(d)};
    for (std::size_t k = 0; k < d; ++k) {
        Integer l, h;
        const Rational sl = box.lo[k] * M, sh = box.hi[k] * M;
        mpz_cdiv_q(l.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
        mpz_fdiv_q(h.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
        out.lo[k] = l.get_si();
        out.hi[k] = h.get_si();
        if (out.hi[k] < out.lo[k]) out.empty = true;
    }
    return out;
}

inline Rational count_to_volume(std::uint64_t count, std::int64_t m, std::size_t d) {
    Integer denom = 1;
    for (std::size_t k = 0; k < d; ++k) denom *= to_integer(m);
    Rational v(Integer(static_cast<unsigned long>(count)), denom);
    v.canonicalize();
    return v;
}

// Steps z through the box in the first `dims` coordinates; false when done.
inline bool advance(std::vector<std::int64_t>& z, const ScaledBox& b, std::size_t dims) {
    for (std::size_t k = 0; k < dims; ++k) {
        if (z[k] < b.hi[k]) {
            ++z[k];
            return true;
        }
        z[k] = b.lo[k];
    }
    return false;
}

}  // namespace detail

/// #{ z in Z^d : z / m in region } / m^d, testing every integer point of m * box.
inline Rational lattice_count_volume(const LatticePredicate& inside, const Box& box, std::int64_t m) {
    const auto b = detail::scaled_box(box, m);
    if (b.empty) return 0;
    const std::size_t d = box.dimension();
    std::vector<std::int64_t> z = b.lo;
    std::uint64_t count = 0;
    do {
        if (inside(z, m)) ++count;
    } while (detail::advance(z, b, d));
    return detail::count_to_volume(count, m, d);
}

/// The same count, one line in the last coordinate at a time.
inline Rational lattice_count_volume(const LatticeSlicer& slice, const Box& box, std::int64_t m) {
    const auto b = detail::scaled_box(box, m);
    if (b.empty) return 0;
    const std::size_t d = box.dimension();
    std::vector<std::int64_t> z = b.lo;
    std::uint64_t count = 0;
    do {
        for (const auto& r : slice(z, m, b.lo[d - 1], b.hi[d - 1]))
            if (r.hi >= r.lo) count += static_cast<std::uint64_t>(r.hi - r.lo + 1);
    } while (detail::advance(z, b, d - 1));
    return detail::count_to_volume(count, m, d);
}

namespace detail {

// <normal, x> <= num / den (or <), in machine integers for the lattice scan.
struct LinearTest {
    std::vector<std::int64_t> normal;
    std::vector<double> normal_d;
    std::int64_t num = 0;
    std::int64_t den = 1;
    double offset_d = 0;
    bool strict = false;

    explicit LinearTest(const HalfSpace& h) : num(h.offset.get_num().get_si()), den(h.offset.get_den().get_si()),
                                              offset_d(h.offset.get_d()), strict(h.strict) {
        if (!h.offset.get_num().fits_slong_p() || !h.offset.get_den().fits_slong_p())
            throw Error(ErrorCode::InvalidArgument, "halfspace offset too large for the lattice oracle");
        for (const auto& x : h.normal) {
            if (!x.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "halfspace normal too large");
            normal.push_back(x.get_si());
            normal_d.push_back(x.get_d());
        }
    }

    bool holds(std::span<const double> x) const {
        double v = 0;
        for (std::size_t k = 0; k < normal.size(); ++k) v += normal_d[k] * x[k];
        return strict ? v < offset_d : v <= offset_d;
    }

    // z / m shifted by -u, i.e. the point (z - m u) / m.
    bool holds(std::span<const std::int64_t> z, std::int64_t m, std::span<const std::int64_t> u) const {
        __int128 v = 0;
        for (std::size_t k = 0; k < normal.size(); ++k)
            v += static_cast<__int128>(normal[k]) * (z[k] - (u.empty() ? 0 : m * u[k]));
        const __int128 lhs = v * den, rhs = static_cast<__int128>(num) * m;
        return strict ? lhs < rhs : lhs <= rhs;
    }

    // Narrows r to the last coordinates allowed by this test, other coordinates fixed.
    void narrow(IntRange& r, std::span<const std::int64_t> z, std::int64_t m, std::span<const std::int64_t> u) const {
        const std::size_t last = normal.size() - 1;
        __int128 rest = 0;
        for (std::size_t k = 0; k < last; ++k)
            rest += static_cast<__int128>(normal[k]) * (z[k] - (u.empty() ? 0 : m * u[k]));
        // c den w <= R (or <) for w = z_last - m u_last
        const __int128 c = static_cast<__int128>(normal[last]) * den;
        const __int128 R = static_cast<__int128>(num) * m - rest * den;
        const __int128 shift = u.empty() ? 0 : static_cast<__int128>(m) * u[last];
        if (c == 0) {
            if (strict ? !(0 < R) : !(0 <= R)) r.hi = r.lo - 1;
            return;
        }
        if (c > 0) {
            const __int128 w = strict ? ceil_div(R, c) - 1 : floor_div(R, c);
            r.hi = static_cast<std::int64_t>(std::min<__int128>(r.hi, w + shift));
        } else {
            const __int128 w = strict ? floor_div(R, c) + 1 : ceil_div(R, c);
            r.lo = static_cast<std::int64_t>(std::max<__int128>(r.lo, w + shift));
        }
    }

    static __int128 floor_div(__int128 a, __int128 b) {
        __int128 q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }
    static __int128 ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }
};

inline std::vector<LinearTest> compile(const std::vector<HalfSpace>& hs) { return {hs.begin(), hs.end()}; }

inline bool all_hold(const std::vector<LinearTest>& tests, std::span<const double> x) {
    for (const auto& t : tests)
        if (!t.holds(x)) return false;
    return true;
}

inline bool all_hold(const std::vector<LinearTest>& tests, std::span<const std::int64_t> z, std::int64_t m,
                     std::span<const std::int64_t> u = {}) {
    for (const auto& t : tests)
        if (!t.holds(z, m, u)) return false;
    return true;
}

inline IntRange narrow_all(const std::vector<LinearTest>& tests, std::span<const std::int64_t> z, std::int64_t m,
                           std::int64_t lo, std::int64_t hi, std::span<const std::int64_t> u = {}) {
    IntRange r{lo, hi};
    for (const auto& t : tests) {
        t.narrow(r, z, m, u);
        if (r.hi < r.lo) break;
    }
    return r;
}

// Sorted, merged union of the nonempty ranges.
inline std::vector<IntRange> merge_ranges(std::vector<IntRange> rs) {
    std::erase_if(rs, [](const IntRange& r) { return r.hi < r.lo; });
    std::sort(rs.begin(), rs.end(), [](const IntRange& x, const IntRange& y) { return x.lo < y.lo; });
    std::vector<IntRange> out;
    for (const auto& r : rs) {
        if (!out.empty() && r.lo <= out.back().hi + 1) {
            out.back().hi = std::max(out.back().hi, r.hi);
        } else {
            out.push_back(r);
        }
    }
    return out;
}

inline void extend(Box& box, const RatVector& v) {
    if (box.lo.empty()) {
        box.lo = v;
        box.hi = v;
        return;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < box.lo[k]) box.lo[k] = v[k];
        if (v[k] > box.hi[k]) box.hi[k] = v[k];
    }
}

}  // namespace detail

// ---- predicates ----

inline RealPredicate real_predicate(const HPolytope& p) {
    return [tests = detail::compile(p.halfspaces())](std::span<const double> x) { return detail::all_hold(tests, x); };
}

inline LatticePredicate lattice_predicate(const HPolytope& p) {
    return [tests = detail::compile(p.halfspaces())](std::span<const std::int64_t> z, std::int64_t m) {
        return detail::all_hold(tests, z, m);
    };
}

inline LatticeSlicer lattice_slicer(const HPolytope& p) {
    return [tests = detail::compile(p.halfspaces())](std::span<const std::int64_t> z, std::int64_t m, std::int64_t lo,
                                                     std::int64_t hi) {
        return std::vector<IntRange>{detail::narrow_all(tests, z, m, lo, hi)};
    };
}

/// Any of the given polytopes.
inline RealPredicate real_predicate(const std::vector<HPolytope>& parts) {
    std::vector<std::vector<detail::LinearTest>> tests;
    for (const auto& p : parts) tests.push_back(detail::compile(p.halfspaces()));
    return [tests = std::move(tests)](std::span<const double> x) {
        for (const auto& t : tests)
            if (detail::all_hold(t, x)) return true;
        return false;
    };
}

inline LatticePredicate lattice_predicate(const std::vector<HPolytope>& parts) {
    std::vector<std::vector<detail::LinearTest>> tests;
    for (const auto& p : parts) tests.push_back(detail::compile(p.halfspaces()));
    return [tests = std::move(tests)](std::span<const std::int64_t> z, std::int64_t m) {
        for (const auto& t : tests)
            if (detail::all_hold(t, z, m)) return true;
        return false;
    };
}

inline LatticeSlicer lattice_slicer(const std::vector<HPolytope>& parts) {
    std::vector<std::vector<detail::LinearTest>> tests;
    for (const auto& p : parts) tests.push_back(detail::compile(p.halfspaces()));
    return [tests = std::move(tests)](std::span<const std::int64_t> z, std::int64_t m, std::int64_t lo, std::int64_t hi) {
        std::vector<IntRange> rs;
        for (const auto& t : tests) rs.push_back(detail::narrow_all(t, z, m, lo, hi));
        return detail::merge_ranges(std::move(rs));
    };
}

/// In the closed cone and outside every closed translate.
inline RealPredicate real_predicate(const RegionDifference& r) {
    return [cone = detail::compile(r.cone), tr = r.translates](std::span<const double> x) {
        if (!detail::all_hold(cone, x)) return false;
        std::vector<double> y(x.size());
        for (const auto& u : tr) {
            for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] - static_cast<double>(u[k]);
            if (detail::all_hold(cone, y)) return false;
        }
        return true;
    };
}

inline LatticePredicate lattice_predicate(const RegionDifference& r) {
    return [cone = detail::compile(r.cone), tr = r.translates](std::span<const std::int64_t> z, std::int64_t m) {
        if (!detail::all_hold(cone, z, m)) return false;
        for (const auto& u : tr)
            if (detail::all_hold(cone, z, m, u)) return false;
        return true;
    };
}

inline LatticeSlicer lattice_slicer(const RegionDifference& r) {
    return [cone = detail::compile(r.cone), tr = r.translates](std::span<const std::int64_t> z, std::int64_t m,
                                                               std::int64_t lo, std::int64_t hi) {
        const IntRange base = detail::narrow_all(cone, z, m, lo, hi);
        if (base.hi < base.lo) return std::vector<IntRange>{};
        std::vector<IntRange> removed;
        for (const auto& u : tr) removed.push_back(detail::narrow_all(cone, z, m, base.lo, base.hi, u));
        std::vector<IntRange> out;
        std::int64_t next = base.lo;
        for (const auto& x : detail::merge_ranges(std::move(removed))) {
            if (x.lo > next) out.push_back({next, x.lo - 1});
            next = std::max(next, x.hi + 1);
        }
        if (next <= base.hi) out.push_back({next, base.hi});
        return out;
    };
}

// ---- bounding boxes ----

inline Box bounding_box(const HPolytope& p) {
    Box box;
    for (const auto& v : vertices(p)) detail::extend(box, v);
    return box;
}

inline Box bounding_box(const std::vector<HPolytope>& parts) {
    Box box;
    for (const auto& p : parts)
        for (const auto& v : vertices(p)) detail::extend(box, v);
    if (box.lo.empty()) throw Error(ErrorCode::EmptyPolytope, "no pieces to bound");
    return box;
}

}  // namespace intalg
