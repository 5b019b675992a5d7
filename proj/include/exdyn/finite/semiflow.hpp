#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <exdyn/finite/point_set.hpp>
#include <exdyn/finite/topology.hpp>

namespace exdyn::finite {

// A discrete semi-flow on a finite space: the action of the natural numbers
// generated by a single self-map.  Every trajectory is eventually periodic;
// the functional graph is a disjoint union of cycles with trees hanging off.
class FiniteSemiFlow {
public:
    explicit FiniteSemiFlow(std::vector<int> map) : map_(std::move(map)) {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            int v = map_[static_cast<std::size_t>(i)];
            if (v < 0 || v >= n)
                throw std::invalid_argument("map[" + std::to_string(i) +
                                            "] = " + std::to_string(v) + " is out of range");
        }
    }

    int size() const { return static_cast<int>(map_.size()); }
    const std::vector<int>& map() const { return map_; }

    int step(int x) const { return map_.at(static_cast<std::size_t>(x)); }

    int iterate(int x, long n) const {
        for (long k = 0; k < n; ++k) x = step(x);
        return x;
    }

    // The cycle the trajectory of x falls into, ordered so that
    // cycle[i+1] = map[cycle[i]], starting from the smallest point index.
    std::vector<int> terminal_cycle(int x) const {
        int y = iterate(x, size()); // after size() steps we are on a cycle
        std::vector<int> cyc;
        int z = y;
        do {
            cyc.push_back(z);
            z = step(z);
        } while (z != y);
        auto smallest = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), smallest, cyc.end());
        return cyc;
    }

    point_set terminal_cycle_set(int x) const {
        auto c = terminal_cycle(x);
        return point_set(c.begin(), c.end());
    }

    // Least p with iterate(x, p) on a cycle.
    int preperiod(int x) const {
        point_set cyc = terminal_cycle_set(x);
        int p = 0;
        while (!contains(cyc, x)) {
            x = step(x);
            ++p;
        }
        return p;
    }

    point_set m_periodic(int m) const {
        point_set r;
        for (int x = 0; x < size(); ++x)
            if (iterate(x, m) == x) r.insert(x);
        return r;
    }

    point_set m_cycles(int m) const {
        point_set r;
        for (int x : m_periodic(m)) {
            bool exact = true;
            for (int k = 1; k < m && exact; ++k)
                if (iterate(x, k) == x) exact = false;
            if (exact) r.insert(x);
        }
        return r;
    }

    point_set fixed_points() const { return m_periodic(1); }

    // Union of all cycles.
    point_set periodic_points() const {
        point_set r;
        for (int x = 0; x < size(); ++x) r.insert(iterate(x, size()));
        return r;
    }

private:
    std::vector<int> map_;
};

struct ValidationIssue {
    enum class Kind { Ok, SizeMismatch, NotContinuous };
    Kind kind = Kind::Ok;
    int x = -1; // offending pair for NotContinuous: x in min_open(y) but
    int y = -1; // map[x] not in min_open(map[y])
    bool ok() const { return kind == Kind::Ok; }
};

// A self-map of a finite space is continuous iff it preserves the
// specialization preorder: x in min_open(y) implies map[x] in min_open(map[y]).
inline ValidationIssue validate(const FiniteSemiFlow& flow, const FiniteTopology& topo) {
    if (flow.size() != topo.size())
        return {ValidationIssue::Kind::SizeMismatch, flow.size(), topo.size()};
    for (int y = 0; y < topo.size(); ++y)
        for (int x : topo.min_open(y))
            if (!contains(topo.min_open(flow.step(y)), flow.step(x)))
                return {ValidationIssue::Kind::NotContinuous, x, y};
    return {};
}

} // namespace exdyn::finite
