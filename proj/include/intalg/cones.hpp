#pragma once

// The cone sigma spanned by the primitive vectors of B(a, b), its dual C, and
// the affine semigroup Q = C ∩ Z^{n+2}.

#include <numeric>
#include <string>
#include <vector>

#include "intalg/fan_hilbert.hpp"
#include "intalg/rational.hpp"

namespace intalg {

struct PrimitiveVectors {
    IntVector e1;
    IntVector e2;
    std::vector<IntVector> alphas;  // (-a_i, 0, ..., 1 at slot i+2, ...)
    std::vector<IntVector> betas;   // (0, -b_i, ..., 1 at slot i+2, ...)

    /// e1, e2, alpha_1..alpha_n, beta_1..beta_n.
    std::vector<IntVector> all() const {
        std::vector<IntVector> out{e1, e2};
        out.insert(out.end(), alphas.begin(), alphas.end());
        out.insert(out.end(), betas.begin(), betas.end());
        return out;
    }
};

inline PrimitiveVectors sigma_generators(const ExponentPair& pair) {
    const std::size_t n = pair.n();
    const std::size_t d = n + 2;
    PrimitiveVectors pv;
    pv.e1.assign(d, 0);
    pv.e1[0] = 1;
    pv.e2.assign(d, 0);
    pv.e2[1] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector alpha(d, 0), beta(d, 0);
        alpha[0] = -pair.a[i];
        alpha[i + 2] = 1;
        beta[1] = -pair.b[i];
        beta[i + 2] = 1;
        pv.alphas.push_back(std::move(alpha));
        pv.betas.push_back(std::move(beta));
    }
    return pv;
}

struct DualConeGenerators {
    std::vector<IntVector> coordinate_rays;  // e_3 .. e_{n+2}
    /// w_0 .. w_{n+1}; w_i = (1, lambda_i, t(1, lambda_i)) for 1 <= i <= n,
    /// w_0 = (1, 0, a), w_{n+1} = (0, 1, b).
    std::vector<RatVector> w;

    /// The w rays scaled to primitive integer vectors.
    std::vector<IntVector> primitive_w() const {
        std::vector<IntVector> out;
        for (const auto& v : w) {
            Integer l = 1;
            for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            Integer g = 0;
            for (const auto& x : v) {
                Integer num = x.get_num() * (l / x.get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            }
            IntVector iv;
            for (const auto& x : v) {
                Integer num = x.get_num() * (l / x.get_den()) / g;
                iv.push_back(num.get_si());
            }
            out.push_back(std::move(iv));
        }
        return out;
    }

    std::vector<RatVector> all() const {
        std::vector<RatVector> out;
        for (const auto& e : coordinate_rays) out.push_back(to_rational(e));
        out.insert(out.end(), w.begin(), w.end());
        return out;
    }
};

inline DualConeGenerators dual_generators(const ExponentPair& pair) {
    if (!pair.all_positive()) throw Error(ErrorCode::NonPositiveEntry, "dual_generators needs positive entries");
    const std::size_t n = pair.n();
    const std::size_t d = n + 2;
    DualConeGenerators dg;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(d, 0);
        e[i + 2] = 1;
        dg.coordinate_rays.push_back(std::move(e));
    }
    RatVector w0(d), wlast(d);
    w0[0] = 1;
    w0[1] = 0;
    wlast[0] = 0;
    wlast[1] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        w0[k + 2] = to_integer(pair.a[k]);
        wlast[k + 2] = to_integer(pair.b[k]);
    }
    dg.w.push_back(std::move(w0));
    for (std::size_t i = 0; i < n; ++i) {
        const Rational lambda = make_rational(pair.a[i], pair.b[i]);
        RatVector wi(d);
        wi[0] = 1;
        wi[1] = lambda;
        for (std::size_t k = 0; k < n; ++k) {
            wi[k + 2] = k <= i ? Rational(to_integer(pair.a[k])) : Rational(lambda * to_integer(pair.b[k]));
        }
        dg.w.push_back(std::move(wi));
    }
    dg.w.push_back(std::move(wlast));
    return dg;
}

/// (r, s, t) ∈ Q iff r, s >= 0 and t_i >= max(a_i r, b_i s).
inline bool semigroup_contains(const ExponentPair& pair, std::span<const std::int64_t> point) {
    if (point.size() != pair.n() + 2) return false;
    const auto r = point[0], s = point[1];
    if (r < 0 || s < 0) return false;
    for (std::size_t i = 0; i < pair.n(); ++i) {
        if (point[i + 2] < std::max(pair.a[i] * r, pair.b[i] * s)) return false;
    }
    return true;
}

/// Same membership test for real points of the cone C.
inline bool cone_contains(const ExponentPair& pair, std::span<const Rational> point) {
    if (point.size() != pair.n() + 2) return false;
    if (point[0] < 0 || point[1] < 0) return false;
    for (std::size_t i = 0; i < pair.n(); ++i) {
        if (point[i + 2] < to_integer(pair.a[i]) * point[0]) return false;
        if (point[i + 2] < to_integer(pair.b[i]) * point[1]) return false;
    }
    return true;
}

struct DualityCheck {
    bool ok = true;
    /// Human-readable description of the first failure, empty when ok.
    std::string certificate;
};

/// Checks sigma^vee = C for the given generators.
///
/// (i) every generator pairs nonnegatively with every primitive vector;
/// (ii) every sample point of C is rebuilt as gamma w + theta w' plus a
/// nonnegative combination of the coordinate rays, where w, w' are the two w
/// rays whose planar slopes bracket the point's slope s/r. The samples are
/// the generators, their pairwise sums, and a grid of lifted lattice points.
inline DualityCheck verify_duality(const ExponentPair& pair, const DualConeGenerators& dg) {
    DualityCheck out;
    const auto prims = sigma_generators(pair).all();
    const auto gens = dg.all();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t p = 0; p < prims.size(); ++p) {
            const Rational ip = dot(gens[g], to_rational(prims[p]));
            if (ip < 0) {
                out.ok = false;
                out.certificate = "generator #" + std::to_string(g) + " pairs to " + ip.get_str() +
                                  " with primitive vector #" + std::to_string(p);
                return out;
            }
        }
    }

    const std::size_t n = pair.n();
    const std::size_t d = n + 2;
    // w rays in decreasing planar slope: w_{n+1}, w_1, ..., w_n, w_0.
    std::vector<const RatVector*> chain;
    chain.push_back(&dg.w.back());
    for (std::size_t i = 1; i <= n; ++i) chain.push_back(&dg.w[i]);
    chain.push_back(&dg.w.front());

    std::vector<RatVector> samples = gens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            RatVector m(d);
            for (std::size_t k = 0; k < d; ++k) m[k] = (gens[i][k] + gens[j][k]) / 2;
            samples.push_back(std::move(m));
        }
    }
    for (std::int64_t r = 0; r <= 4; ++r) {
        for (std::int64_t s = 0; s <= 4; ++s) {
            auto t = t_vector({r, s}, pair);
            IntVector p{r, s};
            for (std::size_t k = 0; k < n; ++k) p.push_back(t[k] + static_cast<std::int64_t>(k % 2));
            samples.push_back(to_rational(p));
        }
    }

    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const auto& u = samples[idx];
        if (!cone_contains(pair, u)) {
            out.ok = false;
            out.certificate = "sample #" + std::to_string(idx) + " lies outside C";
            return out;
        }
        // Slope cross-multiplied: point (r, s) against ray (x, y) as s x vs r y.
        RatVector rebuilt(d, Rational(0));
        const Rational r = u[0], s = u[1];
        if (r == 0 && s == 0) {
            // only coordinate rays needed
        } else {
            bool found = false;
            for (std::size_t c = 0; c + 1 < chain.size() && !found; ++c) {
                const auto& hi = *chain[c];
                const auto& lo = *chain[c + 1];
                // hi has slope >= point slope >= lo slope
                if (s * hi[0] <= r * hi[1] && s * lo[0] >= r * lo[1]) {
                    // Solve (r, s) = gamma (hi0, hi1) + theta (lo0, lo1).
                    const Rational det = hi[0] * lo[1] - hi[1] * lo[0];
                    if (det == 0) continue;
                    const Rational gamma = (r * lo[1] - s * lo[0]) / det;
                    const Rational theta = (hi[0] * s - hi[1] * r) / det;
                    if (gamma < 0 || theta < 0) continue;
                    for (std::size_t k = 0; k < d; ++k) rebuilt[k] = gamma * hi[k] + theta * lo[k];
                    found = true;
                }
            }
            if (!found) {
                out.ok = false;
                out.certificate = "no bracketing w pair for sample #" + std::to_string(idx);
                return out;
            }
        }
        if (rebuilt[0] != u[0] || rebuilt[1] != u[1]) {
            out.ok = false;
            out.certificate = "planar part of sample #" + std::to_string(idx) + " not rebuilt";
            return out;
        }
        for (std::size_t k = 2; k < d; ++k) {
            if (u[k] - rebuilt[k] < 0) {
                out.ok = false;
                out.certificate = "sample #" + std::to_string(idx) + " needs a negative multiple of e_" +
                                  std::to_string(k + 1);
                return out;
            }
        }
    }
    return out;
}

inline DualityCheck verify_duality(const ExponentPair& pair) { return verify_duality(pair, dual_generators(pair)); }

/// Pairs (p, q) of Q-members with p - q = e_k for each k, witnessing gp(Q) = Z^{n+2}.
inline std::vector<std::pair<IntVector, IntVector>> group_witnesses(const ExponentPair& pair) {
    const std::size_t n = pair.n();
    const std::size_t d = n + 2;
    std::vector<std::pair<IntVector, IntVector>> out;
    IntVector base(d, 0);  // t = max(a, b) covers both lifts below
    for (std::size_t i = 0; i < n; ++i) base[i + 2] = std::max(pair.a[i], pair.b[i]);
    for (std::size_t k = 0; k < d; ++k) {
        IntVector p = base;
        p[k] += 1;
        out.emplace_back(p, base);
    }
    return out;
}

}  // namespace intalg
