#pragma once

// Command-line driver: single reports, parameter sweeps, and region meshes.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "intalg/mesh.hpp"
#include "intalg/report_json.hpp"

namespace intalg {

struct RunConfig {
    std::string a;
    std::string b;
    std::string invariants = "all";
    std::string method = "exact";
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::int64_t lattice_scale = 30;
    std::string output = "json";
    std::optional<std::string> mesh;
    std::optional<std::string> sweep;
    unsigned threads = 0;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDisagreement = 3, kExitInternal = 4 };

inline IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty exponent vector");
    return out;
}

// ---- sweeps ----

struct SweepRow {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::optional<std::int64_t> k;
};

/// Grammar: comma-separated terms NAME=LO..HI, NAME=VALUE, or a=b, with
/// NAME in {a, b, k}. "k=..,b=.." sweeps B(kb, b); "a=b,a=.." sweeps B(a, a);
/// "a=..,b=.." sweeps all pairs. Rows follow the order of the terms.
inline std::vector<SweepRow> parse_sweep(const std::string& spec) {
    struct Range {
        std::int64_t lo, hi;
    };
    std::optional<Range> ra, rb, rk;
    std::string first;
    bool tie = false;
    std::stringstream in(spec);
    std::string term;
    while (std::getline(in, term, ',')) {
        const auto eq = term.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "sweep term '" + term + "' has no '='");
        const std::string name = term.substr(0, eq), value = term.substr(eq + 1);
        if ((name == "a" && value == "b") || (name == "b" && value == "a")) {
            tie = true;
            continue;
        }
        Range r{};
        const auto dots = value.find("..");
        try {
            if (dots == std::string::npos) {
                r.lo = r.hi = std::stoll(value);
            } else {
                r.lo = std::stoll(value.substr(0, dots));
                r.hi = std::stoll(value.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad range in sweep term '" + term + "'");
        }
        if (r.lo < 1 || r.hi < r.lo) throw Error(ErrorCode::InvalidArgument, "sweep range must satisfy 1 <= lo <= hi");
        if (name == "a") ra = r;
        else if (name == "b") rb = r;
        else if (name == "k") rk = r;
        else throw Error(ErrorCode::InvalidArgument, "unknown sweep parameter '" + name + "'");
        if (first.empty()) first = name;
    }
    std::vector<SweepRow> rows;
    if (rk) {
        if (!rb || ra || tie) throw Error(ErrorCode::InvalidArgument, "a k sweep needs a b range and no a");
        const bool k_outer = first == "k";
        const Range outer = k_outer ? *rk : *rb, inner = k_outer ? *rb : *rk;
        for (auto x = outer.lo; x <= outer.hi; ++x)
            for (auto y = inner.lo; y <= inner.hi; ++y) {
                const auto k = k_outer ? x : y, b = k_outer ? y : x;
                rows.push_back({k * b, b, k});
            }
        return rows;
    }
    if (tie) {
        if (ra && rb) throw Error(ErrorCode::InvalidArgument, "a=b sweeps take a single range");
        const auto r = ra ? ra : rb;
        if (!r) throw Error(ErrorCode::InvalidArgument, "a=b sweep needs a range");
        for (auto x = r->lo; x <= r->hi; ++x) rows.push_back({x, x, std::nullopt});
        return rows;
    }
    if (!ra || !rb) throw Error(ErrorCode::InvalidArgument, "sweep needs ranges for a and b");
    const bool a_outer = first == "a";
    const Range outer = a_outer ? *ra : *rb, inner = a_outer ? *rb : *ra;
    for (auto x = outer.lo; x <= outer.hi; ++x)
        for (auto y = inner.lo; y <= inner.hi; ++y) rows.push_back({a_outer ? x : y, a_outer ? y : x, std::nullopt});
    return rows;
}

/// CSV on `out`; oracle estimates are not part of sweeps.
inline void run_sweep(const std::string& spec, const ReportOptions& base, std::ostream& out) {
    const auto rows = parse_sweep(spec);
    const bool with_k = !rows.empty() && rows.front().k.has_value();
    ReportOptions opts = base;
    opts.oracles = false;
    const auto& sel = opts.select;

    out << "a,b";
    if (with_k) out << ",k";
    out << ",h";
    if (sel.embedding_dimension) out << ",nu";
    if (sel.hilbert_samuel) out << ",e";
    if (sel.class_group) out << ",cl_rank";
    if (sel.q_gorenstein) out << ",q_gorenstein";
    if (sel.f_signature) out << ",s,s_method";
    if (sel.hilbert_kunz) out << ",e_hk,e_hk_method";
    out << '\n';
    for (const auto& row : rows) {
        auto rep = invariant_report({row.a}, {row.b}, opts);
        out << row.a << ',' << row.b;
        if (with_k) out << ',' << *row.k;
        out << ',' << rep.h;
        if (sel.embedding_dimension) out << ',' << *rep.embedding_dimension;
        if (sel.hilbert_samuel) out << ',' << *rep.hilbert_samuel;
        if (sel.class_group) out << ',' << rep.class_group->rank;
        if (sel.q_gorenstein) out << ',' << (*rep.q_gorenstein ? "true" : "false");
        if (sel.f_signature) out << ',' << to_fraction_string(*rep.f_signature) << ',' << rep.methods["fSignature"];
        if (sel.hilbert_kunz) out << ',' << to_fraction_string(*rep.hilbert_kunz) << ',' << rep.methods["hilbertKunz"];
        out << '\n';
    }
}

// ---- meshes ----

struct MeshFile {
    std::string name;
    Rational volume;
};

/// Writes hilbert_samuel.off, f_signature.off and hilbert_kunz.off for n = 1.
inline std::vector<MeshFile> write_region_meshes(const ExponentPair& pair, const std::filesystem::path& dir) {
    if (pair.n() != 1) throw Error(ErrorCode::InvalidArgument, "meshes are only written for n = 1");
    std::filesystem::create_directories(dir);
    const auto hs = hilbert_set(pair);
    const std::vector<std::pair<std::string, Mesh>> meshes{
        {"hilbert_samuel.off", polytopes_mesh(hilbert_samuel_region(pair, hs))},
        {"f_signature.off", polytope_mesh(f_signature_polytope(pair))},
        {"hilbert_kunz.off", polytopes_mesh(difference_pieces(hilbert_kunz_region(pair, hs)))},
    };
    std::vector<MeshFile> out;
    for (const auto& [name, mesh] : meshes) {
        std::ofstream f(dir / name);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + (dir / name).string());
        write_off(f, mesh);
        out.push_back({name, mesh_signed_volume(mesh)});
    }
    return out;
}

// ---- entry point ----

inline void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            print_table(value, out, prefix + key + ".");
        } else if (value.is_string()) {
            out << prefix << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << prefix << key << ": " << value.dump() << '\n';
        }
    }
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto fail = [&](int code, const std::string& kind, const std::string& message) {
        Json e;
        e["error"] = {{"code", kind}, {"message", message}};
        err << e.dump() << '\n';
        return code;
    };
    try {
        ReportOptions opts;
        opts.method = parse_method(cfg.method);
        opts.select = InvariantSelection::parse(cfg.invariants);
        opts.oracle = {cfg.samples, cfg.seed, cfg.lattice_scale};
        opts.threads = cfg.threads;
        if (cfg.output != "json" && cfg.output != "table")
            throw Error(ErrorCode::InvalidArgument, "output must be json or table");
        if (cfg.samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
        if (cfg.lattice_scale < 1) throw Error(ErrorCode::InvalidArgument, "lattice scale must be at least 1");

        if (cfg.sweep) {
            run_sweep(*cfg.sweep, opts, out);
            return kExitOk;
        }
        if (cfg.a.empty() || cfg.b.empty()) throw Error(ErrorCode::InvalidArgument, "--a and --b are required");
        const IntVector a = parse_int_vector(cfg.a), b = parse_int_vector(cfg.b);
        const auto rep = invariant_report(a, b, opts);
        Json j = to_json(rep);
        if (cfg.mesh) {
            Json files = Json::array();
            if (rep.n == 1 && !rep.polynomial_ring_only) {
                for (const auto& f : write_region_meshes(validate_and_order(rep.a, rep.b), *cfg.mesh)) {
                    Json m;
                    m["file"] = f.name;
                    detail::put_rational(m, "volume", f.volume);
                    files.push_back(m);
                }
            } else {
                err << "meshes are only written for n = 1 with positive entries\n";
            }
            j["meshes"] = files;
        }
        if (cfg.output == "json") {
            out << j.dump(2) << '\n';
        } else {
            print_table(j, out);
        }
        return kExitOk;
    } catch (const Error& e) {
        const int code = e.code() == ErrorCode::MethodDisagreement ? kExitDisagreement
                         : e.code() == ErrorCode::BoxTooSmall      ? kExitInternal
                                                                   : kExitUsage;
        return fail(code, std::string(to_string(e.code())), e.what());
    } catch (const std::exception& e) {
        return fail(kExitInternal, "Internal", e.what());
    }
}

}  // namespace intalg
