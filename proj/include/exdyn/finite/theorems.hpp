#pragma once

#include <map>
#include <optional>
#include <string>

#include <exdyn/finite/analysis.hpp>
#include <exdyn/finite/ends.hpp>
#include <exdyn/finite/externology.hpp>
#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

// Outcome of one machine-checked statement.  `holds` is the conclusion
// evaluated on this instance; `hypothesis_satisfied` records whether the
// statement's hypotheses are met here.  A false conclusion with satisfied
// hypotheses is a genuine falsification (a bug); with violated hypotheses it
// is informational.  `witness` carries the offending points when the
// conclusion fails.
struct TheoremCheck {
    bool holds = false;
    bool hypothesis_satisfied = false;
    std::optional<point_set> witness;
};

using TheoremResults = std::map<std::string, TheoremCheck>;

namespace detail {

inline std::optional<point_set> diff_witness(const point_set& a, const point_set& b) {
    point_set w = set_union(set_difference(a, b), set_difference(b, a));
    if (w.empty()) return std::nullopt;
    return w;
}

inline TheoremCheck equal_check(const point_set& a, const point_set& b, bool hyp) {
    TheoremCheck c;
    c.holds = (a == b);
    c.hypothesis_satisfied = hyp;
    if (!c.holds) c.witness = diff_witness(a, b);
    return c;
}

inline TheoremCheck subset_check(const point_set& a, const point_set& b, bool hyp) {
    TheoremCheck c;
    c.holds = is_subset(a, b);
    c.hypothesis_satisfied = hyp;
    if (!c.holds) c.witness = set_difference(a, b);
    return c;
}

inline point_set image(const FiniteSemiFlow& flow, const point_set& s) {
    point_set r;
    for (int x : s) r.insert(flow.step(x));
    return r;
}

inline point_set preimage(const FiniteSemiFlow& flow, const point_set& s) {
    point_set r;
    for (int x = 0; x < flow.size(); ++x)
        if (contains(s, flow.step(x))) r.insert(x);
    return r;
}

} // namespace detail

// Checks the statement suite for the right-absorbing externology of a flow.
// Finite spaces are compact, so local compactness and Lagrange stability are
// automatic; T1 coincides with discreteness and regularity with all minimal
// opens being closed.
inline TheoremResults theorem_suite(const FiniteSemiFlow& flow, const FiniteTopology& topo) {
    using detail::equal_check;
    using detail::subset_check;

    TheoremResults out;

    const bool t1 = topo.is_t1();
    const bool regular = topo.is_regular();

    const Externology ext = Externology::right_absorbing(flow, topo);
    const point_set p = flow.periodic_points();
    const point_set poisson = poisson_points(flow, topo);
    const point_set lambda = omega_limit_all(flow, topo);
    const point_set lambda_cl = topo.closure(lambda);
    const point_set l = limit_space(ext, topo);
    const point_set bar_l = bar_limit_space(ext, topo);
    const point_set d = d_region(ext, flow, topo);
    const point_set bar_d = bar_d_region(ext, flow, topo);
    const point_set all = full_set(flow.size());

    // Periodic points always sit inside the limit space of the
    // right-absorbing externology (the flow is exterior for it).
    out["periodic_subset_limit"] = subset_check(p, l, true);

    // A point is non-periodic iff deleting it leaves a right-absorbing open.
    // Needs T1 so singletons are closed.
    {
        TheoremCheck c;
        c.holds = true;
        c.hypothesis_satisfied = t1;
        for (int x = 0; x < flow.size() && c.holds; ++x) {
            point_set complement = set_difference(all, point_set{x});
            bool r_exterior = ext.is_exterior(topo, complement);
            if ((!contains(p, x)) != r_exterior) {
                c.holds = false;
                c.witness = point_set{x};
            }
        }
        out["nonperiodic_complement_absorbing"] = c;
    }

    // Limit space of the right-absorbing externology recovers the periodic
    // points on T1 spaces.
    out["periodic_points_equal_limit"] = equal_check(p, l, t1);

    // Bar-limit space equals the closure of the global omega-limit on
    // locally compact regular spaces (local compactness is automatic).
    out["bar_limit_equals_omega_closure"] = equal_check(bar_l, lambda_cl, regular);

    // Unconditional chain: P(X) <= Poisson <= Lambda(X) <= closure(Lambda).
    {
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        c.holds = is_subset(p, poisson) && is_subset(poisson, lambda) &&
                  is_subset(lambda, lambda_cl);
        if (!c.holds)
            c.witness = set_union(set_difference(p, poisson), set_difference(poisson, lambda));
        out["orbit_chain"] = c;
    }

    // Full chain with both end equalities; needs T1 + regular.
    {
        TheoremCheck c;
        c.hypothesis_satisfied = t1 && regular;
        c.holds = (l == p) && is_subset(p, poisson) && is_subset(poisson, lambda) &&
                  is_subset(lambda, lambda_cl) && (lambda_cl == bar_l);
        if (!c.holds) {
            auto w1 = detail::diff_witness(l, p);
            auto w2 = detail::diff_witness(lambda_cl, bar_l);
            c.witness = set_union(w1.value_or(point_set{}), w2.value_or(point_set{}));
        }
        out["limit_chain"] = c;
    }

    // Attraction-region decomposition for S = bar-L: PA(S) is the disjoint
    // union of PA(empty) and A(S), and A = PA intersect WA.
    {
        AttractionRegions rg = regions(flow, topo, bar_l);
        AttractionRegions rg0 = regions(flow, topo, point_set{});
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        bool disjoint = !intersects(rg0.pseudo, rg.full);
        c.holds = (rg.pseudo == set_union(rg0.pseudo, rg.full)) && disjoint &&
                  (rg.full == set_intersection(rg.pseudo, rg.weak));
        if (!c.holds) c.witness = detail::diff_witness(rg.pseudo, set_union(rg0.pseudo, rg.full));
        out["attraction_decomposition"] = c;

        // With every omega-limit nonempty (Lagrange stability, automatic
        // here), PA(empty) is empty and PA = A.
        TheoremCheck c2;
        c2.hypothesis_satisfied = true;
        c2.holds = rg0.pseudo.empty() && (rg.pseudo == rg.full);
        if (!c2.holds) c2.witness = rg0.pseudo.empty() ? detail::diff_witness(rg.pseudo, rg.full)
                                                       : std::optional<point_set>(rg0.pseudo);
        out["attraction_nonempty_omega"] = c2;
    }

    const AttractionRegions rg_l = regions(flow, topo, l);
    const AttractionRegions rg_barl = regions(flow, topo, bar_l);

    // D <= bar-D <= PA(bar-L).
    {
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        c.holds = is_subset(d, bar_d) && is_subset(bar_d, rg_barl.pseudo);
        if (!c.holds)
            c.witness = set_union(set_difference(d, bar_d), set_difference(bar_d, rg_barl.pseudo));
        out["regions_nested_in_bar_limit"] = c;
    }

    out["bar_region_attracted"] = subset_check(bar_d, rg_barl.full, true);
    out["attraction_inside_region"] = subset_check(rg_l.full, d, true);
    out["pseudo_attraction_inside_region"] = subset_check(rg_l.pseudo, d, true);

    // When L = bar-L the region and the attraction regions all agree.
    {
        TheoremCheck c;
        c.hypothesis_satisfied = (l == bar_l);
        c.holds = (d == rg_l.pseudo) && (rg_l.pseudo == rg_l.full);
        if (!c.holds) c.witness = detail::diff_witness(d, rg_l.pseudo);
        out["region_equals_attraction"] = c;
    }

    // PA(bar-L) minus WA(bar-L \ L) sits inside bar-D.
    {
        point_set fringe = set_difference(bar_l, l);
        AttractionRegions rg_fringe = regions(flow, topo, fringe);
        out["pseudo_attraction_minus_weak_in_bar_region"] =
            subset_check(set_difference(rg_barl.pseudo, rg_fringe.weak), bar_d, true);

        TheoremCheck c;
        c.hypothesis_satisfied = rg_fringe.weak.empty();
        c.holds = (rg_barl.full == bar_d);
        if (!c.holds) c.witness = detail::diff_witness(rg_barl.full, bar_d);
        out["bar_region_equals_attraction"] = c;
    }

    // The limit space of the d-region (relative externology) is the whole
    // limit space: L is right-invariant, so L <= D and D intersect L = L.
    out["limit_of_region_equals_limit"] = equal_check(set_intersection(d, l), l, true);

    // Bar variant on bar-D: intersect E_min into bar-D, take the closure
    // inside bar-D, and compare with bar-L.
    {
        point_set rel = set_intersection(bar_d, ext.min_exterior());
        point_set lhs = set_intersection(topo.closure(rel), bar_d);
        out["bar_limit_of_bar_region"] = equal_check(lhs, bar_l, true);
    }

    // Omega-limits of the regions stay inside bar-L.
    {
        point_set ld = omega_limit_of_set(flow, topo, d);
        point_set lbd = omega_limit_of_set(flow, topo, bar_d);
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        c.holds = is_subset(ld, lbd) && is_subset(topo.closure(lbd), bar_l);
        if (!c.holds) c.witness = set_difference(topo.closure(lbd), bar_l);
        out["omega_of_regions_in_bar_limit"] = c;
    }

    // D and bar-D are completely invariant.
    {
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        c.holds = is_subset(detail::image(flow, d), d) && is_subset(detail::preimage(flow, d), d) &&
                  is_subset(detail::image(flow, bar_d), bar_d) &&
                  is_subset(detail::preimage(flow, bar_d), bar_d);
        if (!c.holds) c.witness = set_difference(detail::preimage(flow, d), d);
        out["regions_completely_invariant"] = c;
    }

    // L and bar-L are right-invariant.
    {
        TheoremCheck c;
        c.hypothesis_satisfied = true;
        c.holds = is_subset(detail::image(flow, l), l) &&
                  is_subset(detail::image(flow, bar_l), bar_l);
        if (!c.holds) c.witness = set_difference(detail::image(flow, l), l);
        out["limits_right_invariant"] = c;
    }

    return out;
}

} // namespace exdyn::finite
