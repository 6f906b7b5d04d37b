#pragma once

// Volumes of bounded differences  C \ (u_1 + C) \ ... \ (u_m + C).

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

#include "intalg/polyvol.hpp"

namespace intalg {

struct RegionDifference {
    /// The ambient cone C as halfspaces.
    std::vector<HalfSpace> cone;
    /// Apexes u_j of the removed translates u_j + C.
    std::vector<IntVector> translates;
    /// Side M of the bounding box [0, M]^d.
    Rational box = 0;

    std::size_t dimension() const { return cone.empty() ? 0 : cone.front().dimension(); }
};

/// M = 2 (1 + largest apex coordinate).
inline Rational default_box_size(const std::vector<IntVector>& translates) {
    std::int64_t m = 0;
    for (const auto& u : translates)
        for (auto x : u) m = std::max(m, x);
    return Rational(to_integer(2 * (1 + m)));
}

struct RegionOptions {
    /// Recompute with the box doubled and require the same value.
    bool certify = true;
    unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline std::vector<Row> box_rows(std::size_t d, const Rational& side) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Integer> up(d, Integer(0)), down(d, Integer(0));
        up[k] = 1;
        down[k] = -1;
        rows.push_back({up, side});
        rows.push_back({down, Rational(0)});
    }
    return rows;
}

// Inclusion-exclusion over all subsets J of the translates:
//
//   Vol(C ∩ Box \ ∪ (u_j + C)) = sum_J (-1)^|J| Vol(C ∩ Box ∩ ∩_{j∈J} (u_j + C)).
//
// Every translate shares the facet normals of C, so the intersection over J is
// C with offsets min_j (offset + a . u_j). Subsets with equal offset vectors
// are merged before any volume is computed.
inline Rational inclusion_exclusion(const RegionDifference& region, const Rational& side, unsigned threads) {
    const std::size_t d = region.dimension();
    std::vector<Row> cone;
    for (const auto& h : region.cone) cone.push_back({h.normal, h.offset});
    if (canonicalize(cone) != Shape::Solid) return 0;

    const std::size_t L = cone.size();
    const std::size_t m = region.translates.size();
    std::vector<RatVector> shifted(m, RatVector(L));
    for (std::size_t j = 0; j < m; ++j) {
        const RatVector u = to_rational(region.translates[j]);
        for (std::size_t l = 0; l < L; ++l) {
            Rational s = cone[l].b;
            for (std::size_t k = 0; k < d; ++k) s += cone[l].a[k] * u[k];
            shifted[j][l] = s;
        }
    }

    std::map<RatVector, long long> coefficient;
    RatVector offsets(L);
    for (std::size_t l = 0; l < L; ++l) offsets[l] = cone[l].b;
    // depth-first over include/exclude decisions
    auto walk = [&](auto&& self, std::size_t j, RatVector& cur, int sign) -> void {
        if (j == m) {
            coefficient[cur] += sign;
            return;
        }
        self(self, j + 1, cur, sign);
        RatVector next = cur;
        for (std::size_t l = 0; l < L; ++l)
            if (shifted[j][l] < next[l]) next[l] = shifted[j][l];
        self(self, j + 1, next, -sign);
    };
    walk(walk, 0, offsets, 1);

    std::vector<std::pair<const RatVector*, long long>> terms;
    for (const auto& [key, c] : coefficient)
        if (c != 0) terms.emplace_back(&key, c);

    const auto boxr = box_rows(d, side);
    std::vector<Rational> values(terms.size());
    auto compute = [&](std::size_t begin, std::size_t step) {
        for (std::size_t t = begin; t < terms.size(); t += step) {
            std::vector<Row> rows = boxr;
            for (std::size_t l = 0; l < L; ++l) rows.push_back({cone[l].a, (*terms[t].first)[l]});
            values[t] = lasserre(std::move(rows), d);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, terms.size())));
    if (threads <= 1) {
        compute(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(compute, w, threads);
        for (auto& th : pool) th.join();
    }
    // fixed summation order, independent of scheduling
    Rational total = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) total += values[t] * Rational(Integer(static_cast<long>(terms[t].second)));
    return total;
}

}  // namespace detail

/// Euclidean volume of C \ ∪_j (u_j + C), computed inside [0, M]^d.
/// With `certify`, the value must survive doubling M, otherwise BoxTooSmall.
inline Rational volume_region_difference(const RegionDifference& region, RegionOptions opts = {}) {
    if (region.cone.empty()) throw Error(ErrorCode::InvalidArgument, "region has no cone constraints");
    if (region.box <= 0) throw Error(ErrorCode::InvalidArgument, "bounding box side must be positive");
    for (const auto& u : region.translates) {
        if (u.size() != region.dimension()) throw Error(ErrorCode::LengthMismatch, "translate dimension mismatch");
    }
    const Rational v = detail::inclusion_exclusion(region, region.box, opts.threads);
    if (opts.certify) {
        const Rational twice = detail::inclusion_exclusion(region, region.box * 2, opts.threads);
        if (twice != v) {
            throw Error(ErrorCode::BoxTooSmall, "volume changes from " + v.get_str() + " to " + twice.get_str() +
                                                    " when the box side doubles from " + region.box.get_str());
        }
    }
    return v;
}

/// The cone C ∩ [0, M]^d as a polytope.
inline HPolytope boxed_cone(const RegionDifference& region) {
    const std::size_t d = region.dimension();
    HPolytope p(d, region.cone);
    auto box = box_polytope(RatVector(d, Rational(0)), RatVector(d, region.box));
    return p.intersect(box);
}

/// Splits the region into convex pieces with disjoint interiors by removing
/// one translate at a time: P \ T = ∪_l P ∩ {a_m x <= c_m, m < l} ∩ {a_l x > c_l}.
/// Pieces of zero volume are dropped.
inline std::vector<HPolytope> difference_pieces(const RegionDifference& region) {
    std::vector<HPolytope> pieces{boxed_cone(region)};
    for (const auto& u : region.translates) {
        const RatVector shift = to_rational(u);
        std::vector<HalfSpace> translated;
        for (const auto& h : region.cone) translated.push_back(h.translated(shift));
        std::vector<HPolytope> next;
        for (const auto& p : pieces) {
            HPolytope inside = p;
            for (const auto& h : translated) inside.add(h);
            if (volume_exact_unchecked(inside) == 0) {
                next.push_back(p);
                continue;
            }
            HPolytope prefix = p;
            for (const auto& h : translated) {
                HPolytope piece = prefix;
                std::vector<Integer> neg(h.normal.size());
                for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -h.normal[i];
                piece.add(HalfSpace{neg, -h.offset, true});
                if (volume_exact_unchecked(piece) != 0) next.push_back(std::move(piece));
                prefix.add(h);
            }
        }
        pieces = std::move(next);
    }
    return pieces;
}

/// Membership in C \ ∪ (u_j + C): in the closed cone and outside every closed translate.
inline bool region_contains(const RegionDifference& region, std::span<const double> x) {
    for (const auto& h : region.cone)
        if (!h.contains(x)) return false;
    std::vector<double> y(x.size());
    for (const auto& u : region.translates) {
        for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] - static_cast<double>(u[k]);
        bool in_translate = true;
        for (const auto& h : region.cone) {
            if (!h.contains(std::span<const double>(y))) {
                in_translate = false;
                break;
            }
        }
        if (in_translate) return false;
    }
    return true;
}

}  // namespace intalg
