#pragma once

#include "partalg/errors.hpp"
#include "partalg/filter.hpp"
#include "partalg/partition.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace partalg {

/// Filter files: {"k": 2, "l": 0, "generators": [[2,1], [3]]}. Generators may
/// also be strings in partition syntax ("7^3,2^4"). Without k and l the
/// filter has no ambient.
inline Filter filter_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("filter JSON must be an object");
    std::optional<Hook> ambient;
    const bool has_k = j.contains("k"), has_l = j.contains("l");
    if (has_k || has_l) {
        if (!has_k || !has_l) throw InvalidArgument("filter JSON needs both k and l, or neither");
        if (!j["k"].is_number_integer() || !j["l"].is_number_integer())
            throw InvalidArgument("k and l must be integers");
        ambient = Hook{j["k"].get<int>(), j["l"].get<int>()};
    }
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InvalidArgument("filter JSON needs a \"generators\" array");
    std::vector<Partition> gens;
    for (const auto& g : j["generators"]) {
        if (g.is_string()) {
            gens.push_back(Partition::parse(g.get<std::string>()));
        } else if (g.is_array()) {
            std::vector<int> parts;
            for (const auto& x : g) {
                if (!x.is_number_integer()) throw InvalidArgument("generator parts must be integers");
                parts.push_back(x.get<int>());
            }
            gens.emplace_back(parts);
        } else {
            throw InvalidArgument("generator must be an array or a string");
        }
    }
    return Filter(std::move(gens), ambient);
}

inline nlohmann::json filter_to_json(const Filter& f) {
    nlohmann::json j;
    if (f.ambient()) {
        j["k"] = f.ambient()->k;
        j["l"] = f.ambient()->l;
    }
    j["generators"] = nlohmann::json::array();
    for (const auto& g : f.generators()) j["generators"].push_back(g.parts());
    return j;
}

inline Filter parse_filter(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("bad filter JSON: ") + e.what());
    }
    return filter_from_json(j);
}

inline Filter load_filter(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open filter file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_filter(ss.str());
}

} // namespace partalg
