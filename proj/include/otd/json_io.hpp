#pragma once

// JSON views of the core value types. Vertex sets serialize as sorted index
// arrays, orientations as arc lists in canonical edge order, witnesses as
// tagged objects. JSON is the contract; human-readable output elsewhere is a
// thin view over these.

#include <json.hpp>

#include "otd/families.hpp"

namespace otd {

inline nlohmann::json to_json(VertexSet s) { return nlohmann::json(s.to_vector()); }

inline nlohmann::json arcs_to_json(const std::vector<std::pair<int, int>>& arcs) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [u, v] : arcs) j.push_back({u, v});
    return j;
}

inline nlohmann::json to_json(const Orientation& d) { return arcs_to_json(to_arcs(d)); }

inline std::vector<std::pair<int, int>> arcs_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("arc list entries must be [tail, head] pairs");
        arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return arcs;
}

inline nlohmann::json to_json(const F1Witness& w) {
    nlohmann::json cycles = nlohmann::json::array();
    for (VertexSet c : w.cycles) cycles.push_back(c.to_vector());
    return {{"family", "f1"},
            {"s", w.s},
            {"path", w.path},
            {"cycles", cycles},
            {"extra_edges", arcs_to_json(w.extra_edges)}};
}

inline nlohmann::json to_json(const F2Witness& w) {
    nlohmann::json cycles = nlohmann::json::array();
    for (VertexSet c : w.cycles) cycles.push_back(c.to_vector());
    return {{"family", "f2"}, {"s", w.s}, {"cycles", cycles}};
}

inline nlohmann::json to_json(const F3Witness& w) {
    nlohmann::json j = to_json(w.base);
    j["family"] = "f3";
    j["base_family"] = "f1";
    j["added_edges"] = arcs_to_json(w.added);
    j["case"] = to_string(w.case_tag);
    return j;
}

inline nlohmann::json to_json(const FamilyWitness& w) {
    return std::visit([](const auto& x) { return to_json(x); }, w);
}

inline nlohmann::json to_json(const FWitness& w) {
    return {{"family", "f"},
            {"cycle", w.cycle.to_vector()},
            {"path", w.path},
            {"attach", w.attach}};
}

inline nlohmann::json to_json(const OrientationSearchStats& s) {
    return {{"orientations_examined", s.orientations_examined},
            {"solver_calls", s.solver_calls},
            {"pruned",
             {{"in_degree", s.pruned(ExtremalRule::in_degree)},
              {"out_degree_cap", s.pruned(ExtremalRule::out_degree_cap)},
              {"zero_out_degree_cap", s.pruned(ExtremalRule::zero_out_degree_cap)},
              {"common_out_neighbor", s.pruned(ExtremalRule::common_out_neighbor)}}}};
}

}  // namespace otd
