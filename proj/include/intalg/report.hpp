#pragma once

// One-stop computation of every invariant of B(a, b), with the method that
// produced each value and optional oracle estimates.

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "intalg/formulas.hpp"
#include "intalg/invariants.hpp"
#include "intalg/oracles.hpp"

namespace intalg {

enum class Method { Exact, Formula, Oracle, All };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Formula: return "formula";
        case Method::Oracle: return "oracle";
        case Method::All: return "all";
    }
    return "exact";
}

inline Method parse_method(const std::string& s) {
    if (s == "exact") return Method::Exact;
    if (s == "formula") return Method::Formula;
    if (s == "oracle") return Method::Oracle;
    if (s == "all") return Method::All;
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + s + "' (exact, formula, oracle, all)");
}

// Provenance tags.
inline constexpr const char* kExactVolume = "exact-volume";
inline constexpr const char* kClosedForm = "closed-form";
inline constexpr const char* kBothAgree = "both-agree";

struct InvariantSelection {
    bool hilbert_samuel = true;
    bool embedding_dimension = true;
    bool class_group = true;
    bool q_gorenstein = true;
    bool f_signature = true;
    bool hilbert_kunz = true;

    /// Comma-separated names from hs, embdim, cl, qgor, fsig, hk, or "all".
    static InvariantSelection parse(const std::string& text) {
        if (text.empty() || text == "all") return {};
        InvariantSelection s{false, false, false, false, false, false};
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item == "hs") s.hilbert_samuel = true;
            else if (item == "embdim") s.embedding_dimension = true;
            else if (item == "cl") s.class_group = true;
            else if (item == "qgor") s.q_gorenstein = true;
            else if (item == "fsig") s.f_signature = true;
            else if (item == "hk") s.hilbert_kunz = true;
            else if (item == "all") s = {};
            else throw Error(ErrorCode::InvalidArgument, "unknown invariant '" + item + "' (hs, embdim, cl, qgor, fsig, hk)");
        }
        return s;
    }
};

struct OracleSettings {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::int64_t lattice_scale = 30;
};

struct ReportOptions {
    Method method = Method::All;
    InvariantSelection select;
    OracleSettings oracle;
    /// Off turns the oracle and all methods into their exact-only variants.
    bool oracles = true;
    unsigned threads = 0;
};

struct OracleCheck {
    Rational exact;
    double monte_carlo = 0;
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Rational lattice;
    std::int64_t lattice_scale = 0;
    /// |monte_carlo - exact| <= 4 standard errors.
    bool monte_carlo_agrees = false;

    bool operator==(const OracleCheck&) const = default;
};

struct InvariantReport {
    IntVector input_a;
    IntVector input_b;
    /// Fan-ordered positive core; empty when B is a polynomial ring.
    IntVector a;
    IntVector b;
    /// Input index of each core position.
    std::vector<std::size_t> permutation;
    bool nondegenerate = false;
    bool polynomial_ring_only = false;
    std::vector<std::size_t> adjoined_variables;

    std::size_t n = 0;
    std::size_t dimension = 0;
    std::vector<std::vector<HilbertPoint>> segments;
    std::vector<HilbertPoint> hilbert_set;
    std::size_t h = 0;
    std::optional<std::size_t> embedding_dimension;
    std::optional<std::int64_t> hilbert_samuel;
    /// Raw volume of the union of the S_i; e = (n+2)! times this.
    std::optional<Rational> hilbert_samuel_volume;
    std::optional<ClassGroup> class_group;
    std::optional<bool> q_gorenstein;
    std::optional<Rational> f_signature;
    std::optional<Rational> hilbert_kunz;
    std::map<std::string, std::string> methods;
    std::map<std::string, OracleCheck> oracles;

    bool operator==(const InvariantReport&) const = default;
};

// ---- closed-form coverage ----

namespace detail {

// k with a = k b componentwise, if any.
inline std::optional<std::int64_t> common_multiple(const IntVector& a, const IntVector& b) {
    if (b[0] == 0 || a[0] % b[0] != 0) return std::nullopt;
    const std::int64_t k = a[0] / b[0];
    if (k < 1) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != k * b[i]) return std::nullopt;
    return k;
}

inline IntVector sorted_descending(IntVector v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace detail

/// Closed-form F-signature when one of the proved regimes applies:
/// n = 1 (either order), or a = k b / b = k a componentwise.
inline std::optional<Rational> f_signature_closed_form(const ExponentPair& pair) {
    if (pair.n() == 1) {
        const auto hi = std::max(pair.a[0], pair.b[0]), lo = std::min(pair.a[0], pair.b[0]);
        return f_signature_formula_n1(hi, lo);
    }
    if (auto k = detail::common_multiple(pair.a, pair.b)) return f_signature_formula_kb(*k, detail::sorted_descending(pair.b));
    if (auto k = detail::common_multiple(pair.b, pair.a)) return f_signature_formula_kb(*k, detail::sorted_descending(pair.a));
    return std::nullopt;
}

/// Closed-form Hilbert-Kunz multiplicity: a = b (any n), or n = 1 with one
/// entry a multiple of the other.
inline std::optional<Rational> hilbert_kunz_closed_form(const ExponentPair& pair) {
    if (pair.a == pair.b) return hk_formula_a_eq_b(pair.a);
    if (pair.n() == 1) {
        if (auto k = detail::common_multiple(pair.a, pair.b)) return hk_formula_kb(*k, pair.b[0]);
        if (auto k = detail::common_multiple(pair.b, pair.a)) return hk_formula_kb(*k, pair.a[0]);
    }
    return std::nullopt;
}

// ---- oracles ----

inline OracleCheck run_oracles(const Rational& exact, const RealPredicate& real, const LatticeSlicer& lattice,
                               const Box& box, const OracleSettings& s) {
    OracleCheck c;
    c.exact = exact;
    const auto mc = monte_carlo_volume(real, box, s.samples, s.seed);
    c.monte_carlo = mc.value;
    c.standard_error = mc.standard_error;
    c.samples = mc.samples;
    c.seed = s.seed;
    c.lattice = lattice_count_volume(lattice, box, s.lattice_scale);
    c.lattice_scale = s.lattice_scale;
    c.monte_carlo_agrees = std::abs(mc.value - exact.get_d()) <= std::max(4 * mc.standard_error, 1e-9);
    return c;
}

inline OracleCheck f_signature_oracle(const ExponentPair& pair, const Rational& exact, const OracleSettings& s) {
    const auto p = f_signature_polytope(pair);
    return run_oracles(exact, real_predicate(p), lattice_slicer(p), bounding_box(p), s);
}

inline OracleCheck hilbert_kunz_oracle(const ExponentPair& pair, const HilbertSet& hs, const Rational& exact,
                                       const OracleSettings& s) {
    const auto region = hilbert_kunz_region(pair, hs);
    const auto box = bounding_box(difference_pieces(region));
    return run_oracles(exact, real_predicate(region), lattice_slicer(region), box, s);
}

inline OracleCheck hilbert_samuel_oracle(const ExponentPair& pair, const HilbertSet& hs, const Rational& exact,
                                         const OracleSettings& s) {
    const auto parts = hilbert_samuel_region(pair, hs);
    return run_oracles(exact, real_predicate(parts), lattice_slicer(parts), bounding_box(parts), s);
}

// ---- the report ----

namespace detail {

inline void check_agreement(const char* what, const Rational& exact, const Rational& closed) {
    if (exact != closed) {
        throw Error(ErrorCode::MethodDisagreement, std::string(what) + ": volume gives " + exact.get_str() +
                                                       " but the closed form gives " + closed.get_str());
    }
}

// Picks the value and provenance tag for one volume invariant.
template <typename Exact>
inline std::pair<Rational, std::string> resolve(Method method, const char* what, const std::optional<Rational>& closed,
                                                Exact&& exact) {
    if (method == Method::Formula && closed) return {*closed, kClosedForm};
    const Rational v = exact();
    if ((method == Method::All) && closed) {
        check_agreement(what, v, *closed);
        return {v, kBothAgree};
    }
    return {v, kExactVolume};
}

}  // namespace detail

inline InvariantReport invariant_report(const IntVector& a, const IntVector& b, const ReportOptions& opts = {}) {
    const auto red = reduce_degenerate(a, b);
    const auto& sel = opts.select;
    InvariantReport rep;
    rep.input_a = a;
    rep.input_b = b;
    rep.n = a.size();
    rep.dimension = a.size() + 2;
    rep.adjoined_variables = red.adjoined_variables;
    rep.polynomial_ring_only = red.polynomial_ring_only;

    if (red.polynomial_ring_only) {
        // B is a polynomial ring in n + 2 variables: regular, so every multiplicity is 1.
        rep.nondegenerate = false;
        rep.hilbert_set = {{1, 0}, {0, 1}};
        rep.h = 2;
        if (sel.embedding_dimension) rep.embedding_dimension = rep.n + 2;
        if (sel.hilbert_samuel) {
            rep.hilbert_samuel = 1;
            rep.hilbert_samuel_volume = 1 / factorial(static_cast<unsigned>(rep.dimension));
            rep.methods["hilbertSamuel"] = kClosedForm;
        }
        if (sel.class_group) rep.class_group = ClassGroup{};
        if (sel.q_gorenstein) rep.q_gorenstein = true;
        if (sel.f_signature) {
            rep.f_signature = 1;
            rep.methods["fSignature"] = kClosedForm;
        }
        if (sel.hilbert_kunz) {
            rep.hilbert_kunz = 1;
            rep.methods["hilbertKunz"] = kClosedForm;
        }
        return rep;
    }

    const ExponentPair& pair = *red.core;
    rep.a = pair.a;
    rep.b = pair.b;
    for (auto p : pair.permutation) rep.permutation.push_back(red.core_indices[p]);
    rep.nondegenerate = pair.nondegenerate && red.adjoined_variables.empty();
    const auto hs = hilbert_set(pair);
    rep.segments = hs.segments;
    rep.hilbert_set = hs.merged;
    rep.h = hs.h();
    const bool oracle = opts.oracles && (opts.method == Method::Oracle || opts.method == Method::All);
    // Core invariants lift unchanged to the polynomial extension.
    if (sel.embedding_dimension) rep.embedding_dimension = rep.n + rep.h;
    if (sel.hilbert_samuel) {
        if (opts.method == Method::Formula) {
            rep.hilbert_samuel = static_cast<std::int64_t>(rep.h) - 1;
            rep.methods["hilbertSamuel"] = kClosedForm;
        } else {
            rep.hilbert_samuel = hilbert_samuel(pair, hs);
            rep.methods["hilbertSamuel"] = kBothAgree;
        }
        // Raw volume of the core region, scaled to the full dimension.
        const std::size_t core_dim = pair.n() + 2;
        rep.hilbert_samuel_volume = Rational(to_integer(*rep.hilbert_samuel)) / factorial(static_cast<unsigned>(rep.dimension));
        if (oracle) {
            rep.oracles["hilbertSamuel"] = hilbert_samuel_oracle(
                pair, hs, Rational(to_integer(*rep.hilbert_samuel)) / factorial(static_cast<unsigned>(core_dim)), opts.oracle);
        }
    }
    if (sel.class_group) {
        rep.class_group = class_group(pair);
        if (rep.class_group->rank != pair.n() || !rep.class_group->torsion_free()) {
            throw Error(ErrorCode::MethodDisagreement, "class group is not free of rank n");
        }
    }
    if (sel.q_gorenstein) rep.q_gorenstein = is_q_gorenstein(pair);
    if (sel.f_signature) {
        auto [v, tag] = detail::resolve(opts.method, "F-signature", f_signature_closed_form(pair),
                                        [&] { return f_signature_exact(pair); });
        rep.f_signature = v;
        rep.methods["fSignature"] = tag;
        if (oracle) rep.oracles["fSignature"] = f_signature_oracle(pair, v, opts.oracle);
    }
    if (sel.hilbert_kunz) {
        RegionOptions ro;
        ro.threads = opts.threads;
        auto [v, tag] = detail::resolve(opts.method, "Hilbert-Kunz multiplicity", hilbert_kunz_closed_form(pair),
                                        [&] { return volume_region_difference(hilbert_kunz_region(pair, hs), ro); });
        rep.hilbert_kunz = v;
        rep.methods["hilbertKunz"] = tag;
        if (oracle) rep.oracles["hilbertKunz"] = hilbert_kunz_oracle(pair, hs, v, opts.oracle);
    }
    return rep;
}

/// The structural relations every report must satisfy; returns the first violation.
inline std::optional<std::string> report_violation(const InvariantReport& r) {
    if (r.dimension != r.n + 2) return "dimension != n + 2";
    if (r.embedding_dimension && r.hilbert_samuel &&
        *r.hilbert_samuel != static_cast<std::int64_t>(*r.embedding_dimension) - static_cast<std::int64_t>(r.n) - 1)
        return "e != nu - n - 1";
    if (r.f_signature && (*r.f_signature <= 0 || *r.f_signature > 1)) return "F-signature outside (0, 1]";
    if (r.hilbert_kunz && *r.hilbert_kunz < 1) return "Hilbert-Kunz multiplicity below 1";
    if (r.q_gorenstein && *r.q_gorenstein && r.f_signature && r.hilbert_kunz && *r.f_signature + *r.hilbert_kunz != 2)
        return "Gorenstein ring with s + e_HK != 2";
    return std::nullopt;
}

}  // namespace intalg
