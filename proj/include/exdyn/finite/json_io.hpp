#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <exdyn/errors.hpp>
#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

struct FiniteInput {
    FiniteSemiFlow flow;
    FiniteTopology topo;
    std::optional<point_set> s;
};

inline nlohmann::json to_json(const point_set& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int x : s) a.push_back(x);
    return a;
}

inline point_set point_set_from_json(const nlohmann::json& a, int size, const char* what) {
    if (!a.is_array()) throw parse_error(std::string(what) + " must be an array of indices");
    point_set r;
    for (const auto& v : a) {
        if (!v.is_number_integer()) throw parse_error(std::string(what) + " must hold integers");
        int x = v.get<int>();
        if (x < 0 || x >= size)
            throw parse_error(std::string(what) + " index " + std::to_string(x) + " out of range");
        r.insert(x);
    }
    return r;
}

// Input document:
//   { "size": n, "map": [..], "topology": "discrete" | {"min_open": [[..],..]},
//     "S": [..] (optional) }
inline FiniteInput parse_finite_input(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("input must be a JSON object");
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw parse_error("missing integer field \"size\"");
    const int size = j["size"].get<int>();
    if (size <= 0) throw parse_error("\"size\" must be positive");

    if (!j.contains("map") || !j["map"].is_array())
        throw parse_error("missing array field \"map\"");
    std::vector<int> map;
    for (const auto& v : j["map"]) {
        if (!v.is_number_integer()) throw parse_error("\"map\" must hold integers");
        map.push_back(v.get<int>());
    }
    if (static_cast<int>(map.size()) != size)
        throw parse_error("\"map\" length does not match \"size\"");
    for (int v : map)
        if (v < 0 || v >= size) throw parse_error("\"map\" value out of range");

    if (!j.contains("topology")) throw parse_error("missing field \"topology\"");
    const auto& t = j["topology"];
    std::optional<FiniteTopology> topo;
    if (t.is_string() && t.get<std::string>() == "discrete") {
        topo = FiniteTopology::discrete(size);
    } else if (t.is_object() && t.contains("min_open")) {
        const auto& mo = t["min_open"];
        if (!mo.is_array() || static_cast<int>(mo.size()) != size)
            throw parse_error("\"min_open\" must be an array of length \"size\"");
        std::vector<point_set> sets;
        for (const auto& row : mo) sets.push_back(point_set_from_json(row, size, "min_open row"));
        try {
            topo = FiniteTopology::from_min_open(std::move(sets));
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("bad topology: ") + e.what());
        }
    } else {
        throw parse_error("\"topology\" must be \"discrete\" or {\"min_open\": [..]}");
    }

    std::optional<point_set> s;
    if (j.contains("S")) s = point_set_from_json(j["S"], size, "S");

    return FiniteInput{FiniteSemiFlow(std::move(map)), std::move(*topo), std::move(s)};
}

inline FiniteInput parse_finite_input(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("input is not valid JSON");
    return parse_finite_input(j);
}

} // namespace exdyn::finite
