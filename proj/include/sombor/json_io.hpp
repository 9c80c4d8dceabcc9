#pragma once

// JSON views of trees, reports and traces. Reals are rounded to 9 decimal
// places so output is stable across platforms. Layout is documented in
// docs/schema.json.

#include <cmath>
#include <string>

#include "json.hpp"
#include "sombor/decomposition.hpp"
#include "sombor/oracle.hpp"
#include "sombor/swap.hpp"
#include "sombor/tree.hpp"

namespace sombor {

using Json = nlohmann::ordered_json;

inline double round9(double x) { return std::round(x * 1e9) / 1e9; }

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const DegreeSequence& d) {
    Json out = Json::array();
    for (Degree x : d.degrees()) out.push_back(x);
    return out;
}

inline Json to_json(const Tree& t) {
    Json edges = Json::array();
    for (const Edge& e : t.edges()) edges.push_back(to_json(e));
    return Json{{"n", t.vertex_count()}, {"edges", std::move(edges)}};
}

inline Tree tree_from_json(const Json& j) {
    try {
        const auto n = j.at("n").get<std::int64_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::invalid_argument, "edge must be a pair");
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return Tree::validate(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_argument, std::string("malformed tree JSON: ") + e.what());
    }
}

inline Json to_json(const EdgeSwap& s) {
    return Json{{"removed", Json::array({to_json(s.removed[0]), to_json(s.removed[1])})},
                {"added", Json::array({to_json(s.added[0]), to_json(s.added[1])})},
                {"delta", round9(s.predicted_delta)}};
}

inline Json to_json(const VerificationReport& r) {
    Json classes = r.isomorphism_classes ? Json(*r.isomorphism_classes) : Json(nullptr);
    return Json{{"degree_sequence", to_json(r.degree_sequence)},
                {"greedy_value", round9(r.greedy_value)},
                {"oracle_min", round9(r.oracle_min)},
                {"argmin", to_json(r.argmin)},
                {"argmin_canonical", r.argmin_canonical},
                {"labeled_count", r.labeled_count},
                {"isomorphism_classes", std::move(classes)},
                {"minimizer_classes", r.minimizer_classes},
                {"greedy_is_minimizer", r.greedy_is_minimizer},
                {"pass", r.pass}};
}

/// Step trace [{t, d_t, d_p, attached_at, delta, running_total}, ...].
inline Json to_json(const Decomposition& d) {
    Json steps = Json::array();
    double running = d.base_value;
    for (const auto& s : d.steps) {
        running = incremental_sombor(running, s.degree, s.parent_degree);
        steps.push_back(Json{{"t", s.index_t},
                             {"d_t", s.degree},
                             {"d_p", s.parent_degree},
                             {"attached_at", s.attached_at},
                             {"delta", round9(s.delta)},
                             {"running_total", round9(running)}});
    }
    return Json{{"base", to_json(d.base)}, {"base_value", round9(d.base_value)}, {"steps", std::move(steps)}};
}

}  // namespace sombor
