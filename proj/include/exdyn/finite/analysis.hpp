#pragma once

#include <exdyn/finite/externology.hpp>
#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

// Omega-limit of a point: the intersection over n of the closures of the
// tails { map^m(x) : m >= n }.  Tails are decreasing and stabilize at the
// terminal cycle once the preperiod is passed, so the intersection is the
// closure of the terminal cycle.
inline point_set omega_limit(const FiniteSemiFlow& flow, const FiniteTopology& topo, int x) {
    return topo.closure(flow.terminal_cycle_set(x));
}

inline point_set omega_limit_of_set(const FiniteSemiFlow& flow, const FiniteTopology& topo,
                                    const point_set& s) {
    point_set r;
    for (int x : s) {
        point_set lx = omega_limit(flow, topo, x);
        r.insert(lx.begin(), lx.end());
    }
    return r;
}

inline point_set omega_limit_all(const FiniteSemiFlow& flow, const FiniteTopology& topo) {
    return omega_limit_of_set(flow, topo, full_set(flow.size()));
}

// Points that belong to their own omega-limit.
inline point_set poisson_points(const FiniteSemiFlow& flow, const FiniteTopology& topo) {
    point_set r;
    for (int x = 0; x < flow.size(); ++x)
        if (contains(omega_limit(flow, topo, x), x)) r.insert(x);
    return r;
}

struct AttractionRegions {
    point_set pseudo; // PA(S): omega-limit contained in S (possibly empty limit)
    point_set weak;   // WA(S): omega-limit meets S
    point_set full;   // A(S):  omega-limit nonempty and contained in S
};

inline AttractionRegions regions(const FiniteSemiFlow& flow, const FiniteTopology& topo,
                                 const point_set& s) {
    AttractionRegions r;
    for (int x = 0; x < flow.size(); ++x) {
        point_set lx = omega_limit(flow, topo, x);
        bool inside = is_subset(lx, s);
        bool meets = intersects(lx, s);
        if (inside) r.pseudo.insert(x);
        if (meets) r.weak.insert(x);
        if (inside && !lx.empty()) r.full.insert(x);
    }
    return r;
}

// Points whose trajectory is eventually inside every exterior open.  The
// tails stabilize at the terminal cycle and exterior opens all contain
// E_min, so membership reduces to: terminal cycle inside E_min.
inline point_set d_region(const Externology& ext, const FiniteSemiFlow& flow,
                          const FiniteTopology&) {
    point_set r;
    for (int x = 0; x < flow.size(); ++x)
        if (is_subset(flow.terminal_cycle_set(x), ext.min_exterior())) r.insert(x);
    return r;
}

// Same with closures: trajectory eventually inside the closure of every
// exterior open; reduces to terminal cycle inside closure(E_min).
inline point_set bar_d_region(const Externology& ext, const FiniteSemiFlow& flow,
                              const FiniteTopology& topo) {
    point_set cl = topo.closure(ext.min_exterior());
    point_set r;
    for (int x = 0; x < flow.size(); ++x)
        if (is_subset(flow.terminal_cycle_set(x), cl)) r.insert(x);
    return r;
}

} // namespace exdyn::finite
