#pragma once

// Hilbert-Samuel multiplicity, class group, F-signature and Hilbert-Kunz
// multiplicity of B(a, b) from their volume descriptions.

#include <vector>

#include "intalg/cones.hpp"
#include "intalg/fan_hilbert.hpp"
#include "intalg/polyvol.hpp"
#include "intalg/region.hpp"
#include "intalg/smith.hpp"

namespace intalg {

/// The cone C = sigma^vee as halfspaces <-p, x> <= 0 over the primitive vectors p.
inline std::vector<HalfSpace> cone_halfspaces(const ExponentPair& pair) {
    std::vector<HalfSpace> hs;
    for (const auto& p : sigma_generators(pair).all()) {
        IntVector neg(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) neg[k] = -p[k];
        hs.push_back(HalfSpace::make(std::span<const std::int64_t>(neg), 0));
    }
    return hs;
}

// ---- Hilbert-Samuel ----

/// Vertex lists of S_i = conv(0, e_3, ..., e_{n+2}, u_i, u_{i+1}) for consecutive
/// merged Hilbert points. Throws NotUnimodular when |det(v_i, v_{i+1})| != 1.
inline std::vector<std::vector<RatVector>> hilbert_samuel_simplices(const ExponentPair& pair, const HilbertSet& hs) {
    const std::size_t d = pair.n() + 2;
    std::vector<std::vector<RatVector>> out;
    for (std::size_t i = 0; i + 1 < hs.merged.size(); ++i) {
        const auto v = hs.merged[i], w = hs.merged[i + 1];
        const auto det = det2(v, w);
        if (det != 1 && det != -1) {
            throw Error(ErrorCode::NotUnimodular, "consecutive Hilbert points (" + std::to_string(v.r) + "," +
                                                      std::to_string(v.s) + ") and (" + std::to_string(w.r) + "," +
                                                      std::to_string(w.s) + ") have determinant " +
                                                      std::to_string(det));
        }
        std::vector<RatVector> verts{RatVector(d, Rational(0))};
        for (std::size_t k = 2; k < d; ++k) {
            RatVector e(d, Rational(0));
            e[k] = 1;
            verts.push_back(std::move(e));
        }
        verts.push_back(to_rational(lift(v, pair)));
        verts.push_back(to_rational(lift(w, pair)));
        out.push_back(std::move(verts));
    }
    return out;
}

/// Sum of the simplex volumes, each computed from its H-representation.
inline Rational hilbert_samuel_volume(const ExponentPair& pair, const HilbertSet& hs) {
    Rational total = 0;
    for (const auto& s : hilbert_samuel_simplices(pair, hs)) total += volume_exact(simplex_polytope(s));
    return total;
}

/// The union of the S_i as polytopes. The facet opposite the origin is
/// strict, so the pieces are half-open at the Newton boundary.
inline std::vector<HPolytope> hilbert_samuel_region(const ExponentPair& pair, const HilbertSet& hs) {
    std::vector<HPolytope> out;
    for (const auto& s : hilbert_samuel_simplices(pair, hs)) {
        auto p = simplex_polytope(s);
        std::vector<HalfSpace> h = p.halfspaces();
        h.front().strict = true;  // facet omitting vertex 0
        out.emplace_back(p.dimension(), std::move(h));
    }
    return out;
}

/// e(m, B) = h - 1, checked against (n+2)! times the simplex volume.
inline std::int64_t hilbert_samuel(const ExponentPair& pair, const HilbertSet& hs) {
    const auto e = static_cast<std::int64_t>(hs.h()) - 1;
    const Rational scaled = hilbert_samuel_volume(pair, hs) * factorial(static_cast<unsigned>(pair.n() + 2));
    if (scaled != Rational(to_integer(e))) {
        throw Error(ErrorCode::MethodDisagreement,
                    "h - 1 = " + std::to_string(e) + " but the simplex volume gives " + scaled.get_str());
    }
    return e;
}

inline std::int64_t hilbert_samuel(const ExponentPair& pair) { return hilbert_samuel(pair, hilbert_set(pair)); }

// ---- class group ----

struct ClassGroup {
    std::size_t rank = 0;
    /// All nonzero Smith invariants of the primitive-vector matrix.
    std::vector<Integer> smith_invariants;
    /// Invariant factors greater than one.
    std::vector<Integer> torsion;

    bool torsion_free() const { return torsion.empty(); }
    bool operator==(const ClassGroup&) const = default;
};

/// Rows e_1, e_2, alpha_1..alpha_n, beta_1..beta_n.
inline IntMatrix class_group_matrix(const ExponentPair& pair) {
    IntMatrix m;
    for (const auto& p : sigma_generators(pair).all()) {
        std::vector<Integer> row;
        for (auto x : p) row.push_back(to_integer(x));
        m.push_back(std::move(row));
    }
    return m;
}

/// Cl = Z^{2n+2} / im(M) for the matrix above.
inline ClassGroup class_group(const ExponentPair& pair) {
    const auto snf = smith_normal_form(class_group_matrix(pair));
    const auto ck = cokernel(snf);
    return {ck.free_rank, snf.invariant_factors, ck.torsion};
}

inline bool is_q_gorenstein(const ExponentPair& pair) { return pair.a == pair.b; }

// ---- F-signature ----

/// P_sigma = { u : 0 <= <u, p> < 1 } over the primitive vectors p.
inline HPolytope f_signature_polytope(const ExponentPair& pair) {
    const std::size_t d = pair.n() + 2;
    std::vector<HalfSpace> hs;
    for (const auto& p : sigma_generators(pair).all()) {
        IntVector neg(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) neg[k] = -p[k];
        hs.push_back(HalfSpace::make(std::span<const std::int64_t>(neg), 0));
        hs.push_back(HalfSpace::make(std::span<const std::int64_t>(p), 1, true));
    }
    return HPolytope(d, std::move(hs));
}

inline Rational f_signature_exact(const ExponentPair& pair) { return volume_exact(f_signature_polytope(pair)); }

// ---- Hilbert-Kunz ----

/// C minus the translates u + C for every monomial generator of m:
/// the lifted Hilbert points and the variables x_1..x_n.
inline RegionDifference hilbert_kunz_region(const ExponentPair& pair, const HilbertSet& hs) {
    RegionDifference r;
    r.cone = cone_halfspaces(pair);
    r.translates = generator_set(pair, hs).all();
    r.box = default_box_size(r.translates);
    return r;
}

inline RegionDifference hilbert_kunz_region(const ExponentPair& pair) {
    return hilbert_kunz_region(pair, hilbert_set(pair));
}

inline Rational hilbert_kunz_exact(const ExponentPair& pair, RegionOptions opts = {}) {
    return volume_region_difference(hilbert_kunz_region(pair), opts);
}

}  // namespace intalg
