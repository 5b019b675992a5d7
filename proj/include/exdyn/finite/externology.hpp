#pragma once

#include <utility>
#include <vector>

#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/semiflow.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

enum class ExternologyKind { RightAbsorbing, NeighborhoodOfSet };

// A nonempty family of open sets closed under finite intersections and open
// supersets.  On a finite space such a family is itself finite, so it attains
// its intersection: there is a minimum exterior open E_min and the family is
// exactly { E open : E contains E_min }.  We store that single generator.
class Externology {
public:
    // Opens E such that every trajectory tail eventually lands (and stays)
    // inside E.  On a finite space a tail eventually equals the terminal
    // cycle, so these are exactly the opens containing every periodic point;
    // the minimum one is the open hull of the periodic set.
    static Externology right_absorbing(const FiniteSemiFlow& flow, const FiniteTopology& topo) {
        point_set p = flow.periodic_points();
        point_set hull = topo.open_hull(p);
        return Externology(ExternologyKind::RightAbsorbing, std::move(hull), std::move(p));
    }

    // Opens containing a fixed subset S; the minimum one is the open hull of S.
    static Externology neighborhood_of(const FiniteTopology& topo, point_set s) {
        point_set hull = topo.open_hull(s);
        return Externology(ExternologyKind::NeighborhoodOfSet, std::move(hull), std::move(s));
    }

    ExternologyKind kind() const { return kind_; }

    // The minimum exterior open; every exterior open contains it.
    const point_set& min_exterior() const { return min_exterior_; }

    // The defining set (periodic points, or S), kept for reporting.
    const point_set& core() const { return core_; }

    std::vector<point_set> generators() const { return {min_exterior_}; }

    // Decreasing base E_0 >= E_1 >= ...; constant at the minimum here.
    std::vector<point_set> base() const { return {min_exterior_}; }

    bool is_exterior(const FiniteTopology& topo, const point_set& e) const {
        return topo.is_open(e) && is_subset(min_exterior_, e);
    }

private:
    Externology(ExternologyKind kind, point_set min_ext, point_set core)
        : kind_(kind), min_exterior_(std::move(min_ext)), core_(std::move(core)) {}

    ExternologyKind kind_;
    point_set min_exterior_;
    point_set core_;
};

// Intersection of all exterior opens; attained at the minimum.
inline point_set limit_space(const Externology& ext, const FiniteTopology&) {
    return ext.min_exterior();
}

// Intersection of the closures of all exterior opens; closure is monotone,
// so this is the closure of the minimum.
inline point_set bar_limit_space(const Externology& ext, const FiniteTopology& topo) {
    return topo.closure(ext.min_exterior());
}

} // namespace exdyn::finite
