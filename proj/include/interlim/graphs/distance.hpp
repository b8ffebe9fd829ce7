#pragma once

#include "../combinat/dyck.hpp"
#include "ugraph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Shortest-path length; nullopt marks an unreachable pair.
using Distance = std::optional<int>;

inline std::vector<Distance> bfs_from(const UGraph& g, int s) {
    g.check(s);
    std::vector<Distance> d(g.size());
    std::vector<int> q{s};
    d[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        for (int v : g.neighbors(u))
            if (!d[v]) {
                d[v] = *d[u] + 1;
                q.push_back(v);
            }
    }
    return d;
}

inline Distance bfs_distance(const UGraph& g, int u, int v) {
    g.check(v);
    return bfs_from(g, u)[v];
}

inline std::vector<std::vector<Distance>> all_pairs_distances(const UGraph& g) {
    std::vector<std::vector<Distance>> out;
    out.reserve(g.size());
    for (int s = 0; s < g.size(); ++s) out.push_back(bfs_from(g, s));
    return out;
}

inline std::vector<std::vector<int>> connected_components(const UGraph& g) {
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> c{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t h = 0; h < c.size(); ++h)
            for (int v : g.neighbors(c[h]))
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    c.push_back(v);
                }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

inline int largest_component_size(const UGraph& g) {
    int best = 0;
    for (auto& c : connected_components(g)) best = std::max<int>(best, static_cast<int>(c.size()));
    return best;
}

namespace detail {

inline void require_irreducible_f(const std::vector<int>& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == 0)
            throw std::invalid_argument("unit distance: reducible Dyck path (f vanishes at vertex " +
                                        std::to_string(i + 1) + ")");
}

}  // namespace detail

// Distances from vertex i (0-based) to every j >= i, by greedy hops
// i_{m+1} = i_m + f(i_m): d(i, j) = min{m : i_m >= j}. f must not vanish
// before the last vertex.
inline std::vector<int> unit_distances_forward(const std::vector<int>& f, int i) {
    const int n = static_cast<int>(f.size());
    std::vector<int> d(n, 0);
    int c = i, hops = 0;
    int j = i + 1;
    while (j < n) {
        int next = c + f[c];
        ++hops;
        for (; j <= next && j < n; ++j) d[j] = hops;
        c = next;
    }
    return d;
}

// ceil( sum_{k=i}^{j-1} 1 / f(max{i_m : i_m <= k}) ), 1-based i, j
inline int unit_distance_formula(const DyckPath& w, int i, int j) {
    const int n = w.size();
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::out_of_range("unit_distance_formula: vertex out of range 1.." + std::to_string(n));
    if (!w.irreducible()) throw std::invalid_argument("unit_distance_formula: reducible Dyck path");
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    auto f = f_sequence(w);
    // each completed block [i_m, i_{m+1}) contributes exactly 1; the last
    // block contributes (j - i_m) / f(i_m) in (0, 1]
    int c = i - 1, whole = 0;
    const int target = j - 1;
    while (c + f[c] < target) {
        c += f[c];
        ++whole;
    }
    long long num = target - c, den = f[c];
    return whole + static_cast<int>((num + den - 1) / den);
}

}  // namespace interlim
