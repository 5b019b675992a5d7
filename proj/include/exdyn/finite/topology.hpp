#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <exdyn/disjoint_set.hpp>
#include <exdyn/errors.hpp>
#include <exdyn/finite/point_set.hpp>

namespace exdyn::finite {

// A finite topological space encoded by minimal open neighborhoods.
// min_open(i) is the smallest open set containing i; a set E is open iff
// min_open(i) is contained in E for every i in E, so the opens are exactly
// the unions of minimal neighborhoods.  The specialization preorder is
// x <= y iff y lies in min_open(x) (equivalently x lies in closure({y})).
class FiniteTopology {
public:
    static constexpr int default_enumeration_cap = 16;

    static FiniteTopology discrete(int size) {
        std::vector<point_set> mo(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) mo[static_cast<std::size_t>(i)] = {i};
        return FiniteTopology(std::move(mo));
    }

    // Validates reflexivity (i in min_open(i)) and coherence
    // (j in min_open(i) implies min_open(j) subset of min_open(i)).
    static FiniteTopology from_min_open(std::vector<point_set> min_open) {
        const int n = static_cast<int>(min_open.size());
        for (int i = 0; i < n; ++i) {
            const point_set& u = min_open[static_cast<std::size_t>(i)];
            if (!contains(u, i))
                throw std::invalid_argument("min_open[" + std::to_string(i) +
                                            "] does not contain " + std::to_string(i));
            for (int j : u) {
                if (j < 0 || j >= n)
                    throw std::invalid_argument("min_open[" + std::to_string(i) +
                                                "] has out-of-range point " + std::to_string(j));
                if (!is_subset(min_open[static_cast<std::size_t>(j)], u))
                    throw std::invalid_argument(
                        "min_open is not union-coherent: min_open[" + std::to_string(j) +
                        "] is not contained in min_open[" + std::to_string(i) + "]");
            }
        }
        return FiniteTopology(std::move(min_open));
    }

    int size() const { return static_cast<int>(min_open_.size()); }

    const point_set& min_open(int i) const { return min_open_.at(static_cast<std::size_t>(i)); }

    bool is_open(const point_set& e) const {
        for (int i : e)
            if (!is_subset(min_open(i), e)) return false;
        return true;
    }

    bool is_closed(const point_set& a) const {
        return is_open(set_difference(full_set(size()), a));
    }

    // closure(A) = { x : min_open(x) meets A } -- the minimal neighborhood is
    // the smallest open around x, so it meets A iff every open around x does.
    point_set closure(const point_set& a) const {
        point_set r;
        for (int x = 0; x < size(); ++x)
            if (intersects(min_open(x), a)) r.insert(x);
        return r;
    }

    point_set interior(const point_set& a) const {
        point_set r;
        for (int x : a)
            if (is_subset(min_open(x), a)) r.insert(x);
        return r;
    }

    // Smallest open superset: the union of minimal neighborhoods over A.
    point_set open_hull(const point_set& a) const {
        point_set r;
        for (int x : a) r.insert(min_open(x).begin(), min_open(x).end());
        return r;
    }

    bool is_discrete() const {
        for (int i = 0; i < size(); ++i)
            if (min_open(i).size() != 1) return false;
        return true;
    }

    // T1 and discreteness coincide on finite spaces.
    bool is_t1() const { return is_discrete(); }

    // A finite space is regular iff every minimal open is also closed
    // (equivalently the specialization preorder is symmetric).
    bool is_regular() const {
        for (int i = 0; i < size(); ++i)
            if (!is_closed(min_open(i))) return false;
        return true;
    }

    // Comparability in the specialization preorder; path components of a
    // finite space are the connected components of this relation.
    bool comparable(int i, int j) const {
        return contains(min_open(i), j) || contains(min_open(j), i);
    }

    // Path components of `subset` with the subspace topology.  For finite
    // spaces path components equal the components of the comparability graph
    // restricted to the subset.  Returned sorted by smallest member.
    std::vector<point_set> path_components(const point_set& subset) const {
        std::vector<int> pts(subset.begin(), subset.end());
        const int m = static_cast<int>(pts.size());
        disjoint_set ds(m);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (comparable(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]))
                    ds.unite(a, b);
        std::vector<point_set> comps(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a)
            comps[static_cast<std::size_t>(ds.find(a))].insert(pts[static_cast<std::size_t>(a)]);
        std::vector<point_set> out;
        for (auto& c : comps)
            if (!c.empty()) out.push_back(std::move(c));
        return out; // roots are minimal indices, so this is sorted by smallest member
    }

    // All open sets, by filtering bitmasks against the minimal neighborhoods.
    // Exponential; guarded by the cap.
    std::vector<point_set> enumerate_opens(int size_cap = default_enumeration_cap) const {
        const int n = size();
        if (n > size_cap)
            throw size_cap_error("enumerate_opens: size " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(size_cap));
        std::vector<std::uint32_t> mo_mask(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j : min_open(i)) mo_mask[static_cast<std::size_t>(i)] |= (1u << j);
        std::vector<point_set> opens;
        const std::uint32_t limit = (n >= 32) ? 0u : (1u << n);
        for (std::uint32_t mask = 0;; ++mask) {
            bool open = true;
            for (int i = 0; i < n && open; ++i)
                if ((mask >> i) & 1u)
                    open = (mo_mask[static_cast<std::size_t>(i)] & ~mask) == 0;
            if (open) {
                point_set e;
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1u) e.insert(i);
                opens.push_back(std::move(e));
            }
            if (mask + 1 == limit || (limit == 0 && mask == 0xFFFFFFFFu)) break;
        }
        return opens;
    }

    friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
        return a.min_open_ == b.min_open_;
    }

private:
    explicit FiniteTopology(std::vector<point_set> min_open) : min_open_(std::move(min_open)) {}

    std::vector<point_set> min_open_;
};

} // namespace exdyn::finite
