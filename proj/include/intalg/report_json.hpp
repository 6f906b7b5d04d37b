#pragma once

// JSON form of InvariantReport. Rationals are "p/q" strings with a
// "...Decimal" companion for reading; parsing ignores the companions.

#include "json.hpp"

#include "intalg/report.hpp"

namespace intalg {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json points_json(const std::vector<HilbertPoint>& pts) {
    Json arr = Json::array();
    for (auto p : pts) arr.push_back({p.r, p.s});
    return arr;
}

inline std::vector<HilbertPoint> points_from(const Json& j) {
    std::vector<HilbertPoint> out;
    for (const auto& p : j) out.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    return out;
}

inline void put_rational(Json& j, const std::string& key, const Rational& q) {
    j[key] = to_fraction_string(q);
    j[key + "Decimal"] = to_decimal_string(q);
}

inline Rational get_rational(const Json& j, const std::string& key) { return parse_rational(j.at(key).get<std::string>()); }

}  // namespace detail

inline Json to_json(const OracleCheck& c) {
    Json j;
    detail::put_rational(j, "exact", c.exact);
    j["monteCarlo"] = c.monte_carlo;
    j["standardError"] = c.standard_error;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    detail::put_rational(j, "lattice", c.lattice);
    j["latticeScale"] = c.lattice_scale;
    j["monteCarloAgrees"] = c.monte_carlo_agrees;
    return j;
}

inline OracleCheck oracle_from_json(const Json& j) {
    OracleCheck c;
    c.exact = detail::get_rational(j, "exact");
    c.monte_carlo = j.at("monteCarlo").get<double>();
    c.standard_error = j.at("standardError").get<double>();
    c.samples = j.at("samples").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.lattice = detail::get_rational(j, "lattice");
    c.lattice_scale = j.at("latticeScale").get<std::int64_t>();
    c.monte_carlo_agrees = j.at("monteCarloAgrees").get<bool>();
    return c;
}

inline Json to_json(const InvariantReport& r) {
    Json j;
    j["input"] = {{"a", r.input_a}, {"b", r.input_b}};
    j["pair"] = {{"a", r.a}, {"b", r.b}, {"permutation", r.permutation}, {"nondegenerate", r.nondegenerate}};
    j["polynomialRingOnly"] = r.polynomial_ring_only;
    j["adjoinedVariables"] = r.adjoined_variables;
    j["n"] = r.n;
    j["dimension"] = r.dimension;
    Json segs = Json::array();
    for (const auto& s : r.segments) segs.push_back(detail::points_json(s));
    j["hilbertSet"] = {{"segments", segs}, {"merged", detail::points_json(r.hilbert_set)}, {"h", r.h}};
    if (r.embedding_dimension) j["embeddingDimension"] = *r.embedding_dimension;
    if (r.hilbert_samuel) j["hilbertSamuel"] = *r.hilbert_samuel;
    if (r.hilbert_samuel_volume) detail::put_rational(j, "hilbertSamuelVolume", *r.hilbert_samuel_volume);
    if (r.class_group) {
        Json inv = Json::array(), tor = Json::array();
        for (const auto& d : r.class_group->smith_invariants) inv.push_back(d.get_str());
        for (const auto& d : r.class_group->torsion) tor.push_back(d.get_str());
        j["classGroup"] = {{"rank", r.class_group->rank}, {"smithInvariants", inv}, {"torsion", tor}};
    }
    if (r.q_gorenstein) j["qGorenstein"] = *r.q_gorenstein;
    if (r.f_signature) detail::put_rational(j, "fSignature", *r.f_signature);
    if (r.hilbert_kunz) detail::put_rational(j, "hilbertKunz", *r.hilbert_kunz);
    j["methods"] = r.methods;
    Json orc = Json::object();
    for (const auto& [k, c] : r.oracles) orc[k] = to_json(c);
    j["oracles"] = orc;
    return j;
}

inline InvariantReport report_from_json(const Json& j) {
    InvariantReport r;
    r.input_a = j.at("input").at("a").get<IntVector>();
    r.input_b = j.at("input").at("b").get<IntVector>();
    const auto& p = j.at("pair");
    r.a = p.at("a").get<IntVector>();
    r.b = p.at("b").get<IntVector>();
    r.permutation = p.at("permutation").get<std::vector<std::size_t>>();
    r.nondegenerate = p.at("nondegenerate").get<bool>();
    r.polynomial_ring_only = j.at("polynomialRingOnly").get<bool>();
    r.adjoined_variables = j.at("adjoinedVariables").get<std::vector<std::size_t>>();
    r.n = j.at("n").get<std::size_t>();
    r.dimension = j.at("dimension").get<std::size_t>();
    const auto& hs = j.at("hilbertSet");
    for (const auto& s : hs.at("segments")) r.segments.push_back(detail::points_from(s));
    r.hilbert_set = detail::points_from(hs.at("merged"));
    r.h = hs.at("h").get<std::size_t>();
    if (j.contains("embeddingDimension")) r.embedding_dimension = j["embeddingDimension"].get<std::size_t>();
    if (j.contains("hilbertSamuel")) r.hilbert_samuel = j["hilbertSamuel"].get<std::int64_t>();
    if (j.contains("hilbertSamuelVolume")) r.hilbert_samuel_volume = detail::get_rational(j, "hilbertSamuelVolume");
    if (j.contains("classGroup")) {
        ClassGroup cg;
        const auto& c = j["classGroup"];
        cg.rank = c.at("rank").get<std::size_t>();
        for (const auto& d : c.at("smithInvariants")) cg.smith_invariants.emplace_back(d.get<std::string>());
        for (const auto& d : c.at("torsion")) cg.torsion.emplace_back(d.get<std::string>());
        r.class_group = cg;
    }
    if (j.contains("qGorenstein")) r.q_gorenstein = j["qGorenstein"].get<bool>();
    if (j.contains("fSignature")) r.f_signature = detail::get_rational(j, "fSignature");
    if (j.contains("hilbertKunz")) r.hilbert_kunz = detail::get_rational(j, "hilbertKunz");
    r.methods = j.at("methods").get<std::map<std::string, std::string>>();
    for (const auto& [k, v] : j.at("oracles").items()) r.oracles[k] = oracle_from_json(v);
    return r;
}

}  // namespace intalg
