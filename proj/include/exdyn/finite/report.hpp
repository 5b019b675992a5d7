#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <exdyn/finite/analysis.hpp>
#include <exdyn/finite/ends.hpp>
#include <exdyn/finite/externology.hpp>
#include <exdyn/finite/json_io.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/theorems.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

struct BasinEntry {
    EndPointBG end;
    point_set points;
    bool attractor = false;
    point_set immediate;
    bool steenrod = false;
    std::optional<point_set> cech;
};

// Full analysis of one finite semi-flow.  Externology-dependent fields are
// computed for the right-absorbing externology (the one the theorem suite is
// about); the attraction regions are computed for the requested S, which
// defaults to the periodic points.
struct RegionReport {
    int size = 0;
    point_set periodic;
    point_set fixed;
    std::map<int, point_set> m_periodic;   // m -> P_m
    std::map<int, point_set> m_cycles;     // m -> C_m
    point_set poisson;
    point_set lambda;                      // global omega-limit
    point_set limit;                       // L
    point_set bar_limit;                   // bar-L
    point_set d;                           // D
    point_set bar_d;                       // bar-D
    point_set cech_d;                      // stable-component subset of D
    point_set s;                           // the S used for the regions below
    AttractionRegions attraction;          // PA(S), WA(S), A(S)
    std::vector<BasinEntry> basin_entries; // sorted by (cycle, phase)
    TheoremResults theorems;
};

inline RegionReport build_region_report(const FiniteSemiFlow& flow, const FiniteTopology& topo,
                                        const std::optional<point_set>& s_opt = std::nullopt) {
    RegionReport r;
    r.size = flow.size();
    r.periodic = flow.periodic_points();
    r.fixed = flow.fixed_points();
    for (int m = 1; m <= flow.size(); ++m) {
        r.m_periodic[m] = flow.m_periodic(m);
        r.m_cycles[m] = flow.m_cycles(m);
    }
    r.poisson = poisson_points(flow, topo);
    r.lambda = omega_limit_all(flow, topo);

    const Externology ext = Externology::right_absorbing(flow, topo);
    r.limit = limit_space(ext, topo);
    r.bar_limit = bar_limit_space(ext, topo);
    r.d = d_region(ext, flow, topo);
    r.bar_d = bar_d_region(ext, flow, topo);
    r.cech_d = cech_d_region(ext, flow, topo);

    r.s = s_opt.value_or(r.periodic);
    r.attraction = regions(flow, topo, r.s);

    for (const auto& [end, pts] : basins(ext, flow, topo)) {
        BasinEntry e;
        e.end = end;
        e.points = pts;
        e.attractor = is_attractor_end(pts, topo);
        e.immediate = immediate_basin(pts, end, topo);
        e.steenrod = classify_end_steenrod(end);
        e.cech = cech_end(ext, flow, topo, end.cycle.front());
        r.basin_entries.push_back(std::move(e));
    }

    r.theorems = theorem_suite(flow, topo);
    return r;
}

inline nlohmann::json to_json(const TheoremResults& results) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, check] : results) {
        nlohmann::json c;
        c["holds"] = check.holds;
        c["hypothesis_satisfied"] = check.hypothesis_satisfied;
        if (check.witness) c["witness"] = to_json(*check.witness);
        j[name] = c;
    }
    return j;
}

inline nlohmann::json to_json(const RegionReport& r) {
    nlohmann::json j;
    j["size"] = r.size;
    j["P"] = to_json(r.periodic);
    j["Fix"] = to_json(r.fixed);
    nlohmann::json pm = nlohmann::json::object();
    nlohmann::json cm = nlohmann::json::object();
    for (const auto& [m, st] : r.m_periodic) pm[std::to_string(m)] = to_json(st);
    for (const auto& [m, st] : r.m_cycles) cm[std::to_string(m)] = to_json(st);
    j["P_m"] = pm;
    j["C_m"] = cm;
    j["Poisson"] = to_json(r.poisson);
    j["Lambda"] = to_json(r.lambda);
    j["L"] = to_json(r.limit);
    j["bar_L"] = to_json(r.bar_limit);
    j["D"] = to_json(r.d);
    j["bar_D"] = to_json(r.bar_d);
    j["cech_D"] = to_json(r.cech_d);
    j["S"] = to_json(r.s);
    j["PA_S"] = to_json(r.attraction.pseudo);
    j["WA_S"] = to_json(r.attraction.weak);
    j["A_S"] = to_json(r.attraction.full);
    nlohmann::json bs = nlohmann::json::array();
    for (const auto& e : r.basin_entries) {
        nlohmann::json b;
        b["cycle"] = e.end.cycle;
        b["phase"] = e.end.phase;
        b["period"] = e.end.period();
        b["points"] = to_json(e.points);
        b["attractor"] = e.attractor;
        b["immediate_basin"] = to_json(e.immediate);
        b["steenrod_representable"] = e.steenrod;
        if (e.cech) b["cech_component"] = to_json(*e.cech);
        else b["cech_component"] = nullptr;
        bs.push_back(b);
    }
    j["basins"] = bs;
    j["theorem_results"] = to_json(r.theorems);
    return j;
}

// True when some check failed even though its hypotheses were satisfied;
// the CLI turns this into a nonzero exit.
inline bool has_hypothesis_satisfied_failure(const TheoremResults& results) {
    for (const auto& [name, check] : results)
        if (!check.holds && check.hypothesis_satisfied) return true;
    return false;
}

} // namespace exdyn::finite
