#pragma once

#include <algorithm>
#include <set>

namespace exdyn::finite {

// Points of a finite space are indices 0..size-1; subsets are ordered sets so
// that serialization (sorted index arrays) falls out for free.
using point_set = std::set<int>;

inline bool contains(const point_set& s, int x) { return s.count(x) != 0; }

inline bool is_subset(const point_set& a, const point_set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const point_set& a, const point_set& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

inline point_set set_union(const point_set& a, const point_set& b) {
    point_set r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline point_set set_intersection(const point_set& a, const point_set& b) {
    point_set r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(r, r.end()));
    return r;
}

inline point_set set_difference(const point_set& a, const point_set& b) {
    point_set r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.end()));
    return r;
}

inline point_set full_set(int n) {
    point_set r;
    for (int i = 0; i < n; ++i) r.insert(i);
    return r;
}

} // namespace exdyn::finite
