#pragma once

#include <numeric>
#include <vector>

namespace exdyn {

// Union-find with path halving; used for path components of finite spaces
// and for pixel components of basin grids.
struct disjoint_set {
    std::vector<int> parent;

    explicit disjoint_set(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b); // keep the smallest index as root
        parent[b] = a;
    }

    bool same(int a, int b) { return find(a) == find(b); }
};

} // namespace exdyn
