#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <exdyn/errors.hpp>
#include <exdyn/finite/analysis.hpp>
#include <exdyn/finite/externology.hpp>
#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

// The end of a trajectory, represented by the cycle it falls into plus a
// phase.  Phase j means map^m(x) tracks cycle[(m + j) mod period] for all
// large m; with that convention both the shift and the induced map of the
// semi-flow act as phase -> phase + 1 (mod period).  The cycle is ordered
// starting from its smallest point index, which pins the phase labels.
struct EndPointBG {
    std::vector<int> cycle;
    int phase = 0;

    int period() const { return static_cast<int>(cycle.size()); }

    // Action of the shift (equivalently of the semi-flow's induced map).
    EndPointBG advanced() const { return {cycle, (phase + 1) % period()}; }

    friend bool operator==(const EndPointBG& a, const EndPointBG& b) {
        return a.cycle == b.cycle && a.phase == b.phase;
    }
    friend bool operator<(const EndPointBG& a, const EndPointBG& b) {
        return std::tie(a.cycle, a.phase) < std::tie(b.cycle, b.phase);
    }
};

// End of the trajectory of x.  Absent when x is outside the d-region (its
// cycle escapes E_min, so the trajectory is not an exterior map).
inline std::optional<EndPointBG> omega_end(const Externology& ext, const FiniteSemiFlow& flow,
                                           const FiniteTopology&, int x) {
    std::vector<int> cyc = flow.terminal_cycle(x);
    if (!is_subset(point_set(cyc.begin(), cyc.end()), ext.min_exterior())) return std::nullopt;
    const int n = static_cast<int>(cyc.size());
    const int p = flow.preperiod(x);
    int entry = flow.iterate(x, p);
    int j = 0;
    while (cyc[static_cast<std::size_t>(j)] != entry) ++j;
    // map^p(x) = cycle[j], so the phase solves (p + phase) mod n == j.
    int phase = ((j - p) % n + n) % n;
    return EndPointBG{std::move(cyc), phase};
}

// Stable-component end of the trajectory of x: defined when the tail
// eventually stays inside a single path component of every exterior open.
// Tails visit the whole terminal cycle, and E_min is the hardest open, so
// this holds iff the cycle sits inside one path component of E_min; the
// value is that component.
inline std::optional<point_set> cech_end(const Externology& ext, const FiniteSemiFlow& flow,
                                         const FiniteTopology& topo, int x) {
    point_set cyc = flow.terminal_cycle_set(x);
    if (!is_subset(cyc, ext.min_exterior())) return std::nullopt;
    for (const point_set& comp : topo.path_components(ext.min_exterior()))
        if (is_subset(cyc, comp)) return comp;
    return std::nullopt;
}

// Shift-invariance of the (cycle, phase, period) representation: the shift
// adds 1 to the phase mod period, so only period-1 ends are fixed.
inline bool classify_end_steenrod(const EndPointBG& end) { return end.period() == 1; }

// Points of the d-region with a stable-component end.
inline point_set cech_d_region(const Externology& ext, const FiniteSemiFlow& flow,
                               const FiniteTopology& topo) {
    point_set r;
    for (int x = 0; x < flow.size(); ++x)
        if (cech_end(ext, flow, topo, x)) r.insert(x);
    return r;
}

// Partition of the d-region by trajectory end.
inline std::map<EndPointBG, point_set> basins(const Externology& ext, const FiniteSemiFlow& flow,
                                              const FiniteTopology& topo) {
    std::map<EndPointBG, point_set> r;
    for (int x = 0; x < flow.size(); ++x)
        if (auto end = omega_end(ext, flow, topo, x)) r[*end].insert(x);
    return r;
}

inline bool is_attractor_end(const point_set& basin, const FiniteTopology& topo) {
    return topo.is_open(basin);
}

// Union of the path components of the basin (as a subspace) that contain a
// cycle point of the end.  Each basin holds exactly the cycle point matching
// its phase; the others live in sibling basins.
inline point_set immediate_basin(const point_set& basin, const EndPointBG& end,
                                 const FiniteTopology& topo) {
    point_set seeds;
    for (int c : end.cycle)
        if (contains(basin, c)) seeds.insert(c);
    if (seeds.empty())
        throw cycle_not_in_basin_error("immediate_basin: no cycle point of the end lies in the basin");
    point_set r;
    for (const point_set& comp : topo.path_components(basin))
        if (intersects(comp, seeds)) r.insert(comp.begin(), comp.end());
    return r;
}

} // namespace exdyn::finite
