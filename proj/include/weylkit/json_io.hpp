#pragma once

#include <nlohmann/json.hpp>

#include "weylkit/powers.hpp"

namespace weylkit {

using ordered_json = nlohmann::ordered_json;

/// Canonical JSON form of a decomposition: fixed key order, summands sorted
/// lexicographically by weight, dimensions as decimal strings.
inline ordered_json decomposition_to_json(const Decomposition& d) {
    ordered_json j;
    j["rank"] = d.rank;
    ordered_json arr = ordered_json::array();
    for (auto& [w, m] : d.summands) {
        ordered_json s;
        s["weight"] = w;
        s["mult"] = m;
        arr.push_back(std::move(s));
    }
    j["summands"] = std::move(arr);
    j["dim"] = d.total_dimension().str();
    return j;
}

inline Decomposition decomposition_from_json(const ordered_json& j) {
    Decomposition d(j.at("rank").get<Int>());
    for (auto& s : j.at("summands")) {
        d.add(DominantWeight(d.rank, s.at("weight").get<std::vector<Int>>()), s.at("mult").get<Int>());
    }
    return d;
}

inline ordered_json levels_to_json(const LevelDecomposition& ld) {
    ordered_json j;
    j["rank"] = ld.rank;
    ordered_json arr = ordered_json::array();
    for (auto& l : ld.levels) arr.push_back(decomposition_to_json(l));
    j["levels"] = std::move(arr);
    return j;
}

inline std::string weight_text(const std::vector<Int>& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

inline std::string decomposition_text(const Decomposition& d) {
    std::string s;
    for (auto& [w, m] : d.summands) {
        s += weight_text(w);
        if (m != 1) s += " x" + std::to_string(m);
        s += "\n";
    }
    s += "dim " + d.total_dimension().str() + ", " + std::to_string(d.total_multiplicity()) + " summand(s)\n";
    return s;
}

}  // namespace weylkit
