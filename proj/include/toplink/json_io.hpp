#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toplink/curve.hpp"
#include "toplink/extremal.hpp"
#include "toplink/fuzz.hpp"
#include "toplink/linking.hpp"
#include "toplink/pattern_search.hpp"
#include "toplink/set_system.hpp"
#include "toplink/simplicial_complex.hpp"

namespace toplink {

using nlohmann::json; // keys serialize in sorted order

namespace detail {

inline const json& at_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("expected object with key '") + key + "'");
    return j.at(key);
}

inline Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("point must be an array of 3 rational strings");
    const auto coord = [&](std::size_t i) -> Rat {
        const json& c = j.at(i);
        if (c.is_string()) return parse_rational(c.get<std::string>());
        if (c.is_number_integer()) return Rat(c.get<long long>());
        throw std::invalid_argument("coordinate must be a rational string or integer");
    };
    return {coord(0), coord(1), coord(2)};
}

inline json vec3_to_json(const Vec3& p) {
    return json::array({rational_string(p.x, false), rational_string(p.y, false),
                        rational_string(p.z, false)});
}

} // namespace detail

// ---- set systems ----------------------------------------------------------

inline json to_json(const SetSystem& sys) {
    json subsets = json::array();
    for (const auto& s : sys.subsets) subsets.push_back(s.to_indices());
    return json{{"a", sys.ground_size}, {"subsets", subsets}};
}

inline SetSystem set_system_from_json(const json& j) {
    const json& a = detail::at_key(j, "a");
    const json& subsets = detail::at_key(j, "subsets");
    if (!a.is_number_unsigned() || !subsets.is_array())
        throw std::invalid_argument("set system needs unsigned 'a' and array 'subsets'");
    std::vector<std::vector<std::size_t>> lists;
    for (const json& s : subsets) {
        if (!s.is_array()) throw std::invalid_argument("each subset must be an array");
        lists.push_back(s.get<std::vector<std::size_t>>());
    }
    return SetSystem::from_lists(a.get<std::size_t>(), lists);
}

// ---- complexes -------------------------------------------------------------

inline json to_json(const SimplicialComplex& K) {
    json facets = json::array();
    for (const auto& f : K.facets()) {
        json fj = json::array();
        for (int v : f) fj.push_back(K.labels()[static_cast<std::size_t>(v)]);
        facets.push_back(fj);
    }
    return json{{"vertices", K.labels()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    const json& vj = detail::at_key(j, "vertices");
    const json& fj = detail::at_key(j, "facets");
    if (!vj.is_array() || !fj.is_array())
        throw std::invalid_argument("complex needs arrays 'vertices' and 'facets'");
    auto labels = vj.get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex label '" + labels[i] + "'");
    std::vector<Simplex> facets;
    for (const json& f : fj) {
        if (!f.is_array()) throw std::invalid_argument("each facet must be an array");
        Simplex s;
        for (const json& v : f) {
            const auto it = index.find(v.get<std::string>());
            if (it == index.end())
                throw std::invalid_argument("facet uses unknown vertex '" +
                                            v.get<std::string>() + "'");
            s.push_back(it->second);
        }
        facets.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(labels), facets);
}

// ---- curves and embeddings --------------------------------------------------

inline json to_json(const PolygonalCurve& c) {
    json verts = json::array();
    for (const auto& p : c.vertices()) verts.push_back(detail::vec3_to_json(p));
    return json{{"vertices", verts}};
}

inline PolygonalCurve curve_from_json(const json& j) {
    const json& vj = detail::at_key(j, "vertices");
    if (!vj.is_array()) throw std::invalid_argument("curve needs array 'vertices'");
    std::vector<Vec3> pts;
    for (const json& p : vj) pts.push_back(detail::vec3_from_json(p));
    return PolygonalCurve(std::move(pts));
}

inline json to_json(const SpatialEmbedding& emb) {
    json j = to_json(emb.complex());
    json coords = json::array();
    for (const auto& p : emb.coords()) coords.push_back(detail::vec3_to_json(p));
    j["coords"] = coords;
    return j;
}

inline SpatialEmbedding embedding_from_json(const json& j) {
    SimplicialComplex K = complex_from_json(j);
    const json& cj = detail::at_key(j, "coords");
    if (!cj.is_array()) throw std::invalid_argument("embedding needs array 'coords'");
    std::vector<Vec3> coords;
    for (const json& p : cj) coords.push_back(detail::vec3_from_json(p));
    return SpatialEmbedding(std::move(K), std::move(coords));
}

// ---- reports ----------------------------------------------------------------

inline json to_json(const KstReport& r) {
    return json{{"r", r.r},         {"m", r.m},
                {"a", r.a},         {"total", r.total},
                {"s", r.max_intersection}, {"bound", r.bound},
                {"holds", r.holds}};
}

inline json to_json(const PowerMeanReport& r) {
    return json{{"r", r.r},           {"m", r.m},
                {"a", r.a},           {"lhs", r.lhs.str()},
                {"rhs", r.rhs.str()}, {"holds", r.holds},
                {"equality", r.equality}};
}

inline json to_json(const ChainIdentityReport& r) {
    return json{{"r", r.r},
                {"binom_degree_sum", r.binom_degree_sum.str()},
                {"unordered_intersection_sum", r.unordered_intersection_sum.str()},
                {"identity_holds", r.identity_holds},
                {"filtered_sum_pow", r.filtered_sum_pow.str()},
                {"filtered_power_bound", r.filtered_power_bound.str()},
                {"filtered_count", r.filtered_count},
                {"power_mean_holds", r.power_mean_holds},
                {"binom_power_holds", r.binom_power_holds}};
}

inline json to_json(const FuzzViolation& v) {
    return json{{"check", v.check}, {"r", v.r}, {"system", to_json(v.system)}};
}

inline json to_json(const FuzzSummary& s) {
    json by_check = json::object();
    for (const auto& [name, n] : s.violations_by_check) by_check[name] = n;
    json sample = json::array();
    for (const auto& v : s.sample) sample.push_back(to_json(v));
    return json{{"systems", s.systems},
                {"checks_run", s.checks_run},
                {"violations", s.violation_count},
                {"violations_by_check", by_check},
                {"sample", sample},
                {"minimal", s.minimal ? to_json(*s.minimal) : json(nullptr)}};
}

inline json to_json(const ProbeReport& r) {
    return json{{"d", r.d},
                {"r", r.r},
                {"m", r.vertex_count},
                {"a", r.ground_size},
                {"total", r.total},
                {"f_top", r.f_top},
                {"s", r.s_value},
                {"exhaustive", r.exhaustive},
                {"tuples_checked", r.tuples_checked},
                {"bound", r.bound},
                {"holds", r.holds}};
}

inline json to_json(const IsoWitness& w) { return json{{"vertex_map", w.vertex_map}}; }

inline json to_json(const SubdivisionWitness& w) {
    return json{{"branch_map", w.branch_map}, {"edge_paths", w.edge_paths}};
}

inline json to_json(const LinklessReport& r) {
    const char* status = r.status == LinklessStatus::all_zero        ? "all_zero"
                         : r.status == LinklessStatus::witness_found ? "witness_found"
                                                                     : "inconclusive";
    json witness(nullptr);
    if (r.status == LinklessStatus::witness_found)
        witness = json{{"cycle_a", r.witness_cycle_a},
                       {"cycle_b", r.witness_cycle_b},
                       {"linking", r.witness_linking}};
    return json{{"status", status},
                {"pairs_checked", r.pairs_checked},
                {"truncated", r.truncated},
                {"witness", witness}};
}

} // namespace toplink
