#pragma once

#include "ugraph.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

inline constexpr int kSubsetScanMaxN = 16;

namespace detail {

inline void require_small(const UGraph& g, const char* what) {
    if (g.size() > kSubsetScanMaxN)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(g.size()) + " exceeds the exhaustive limit " +
                                    std::to_string(kSubsetScanMaxN));
}

inline std::vector<std::uint32_t> neighbour_masks(const UGraph& g) {
    std::vector<std::uint32_t> nb(g.size(), 0);
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.has_edge(i, j)) nb[i] |= 1u << j;
    return nb;
}

// every outside vertex sees all of mask or none of it
inline bool module_mask(const std::vector<std::uint32_t>& nb, std::uint32_t mask) {
    const int n = static_cast<int>(nb.size());
    for (int u = 0; u < n; ++u) {
        if (mask >> u & 1) continue;
        std::uint32_t s = nb[u] & mask;
        if (s != 0 && s != mask) return false;
    }
    return true;
}

inline bool split_mask(const std::vector<std::uint32_t>& nb, std::uint32_t side) {
    const int n = static_cast<int>(nb.size());
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    const std::uint32_t other = all & ~side;
    std::uint32_t a = 0, b = 0;  // frontier of each side
    for (int u = 0; u < n; ++u) {
        if ((side >> u & 1) && (nb[u] & other)) a |= 1u << u;
        if ((other >> u & 1) && (nb[u] & side)) b |= 1u << u;
    }
    for (int u = 0; u < n; ++u)
        if ((a >> u & 1) && (nb[u] & b) != b) return false;
    return true;
}

}  // namespace detail

inline bool is_module(const UGraph& g, const std::vector<int>& subset) {
    std::vector<char> in(g.size(), 0);
    for (int v : subset) {
        g.check(v);
        in[v] = 1;
    }
    for (int u = 0; u < g.size(); ++u) {
        if (in[u]) continue;
        int seen = 0, total = 0;
        for (int v : subset) {
            if (in[v] != 1) continue;
            ++total;
            seen += g.has_edge(u, v);
        }
        if (seen != 0 && seen != total) return false;
    }
    return true;
}

// Only trivial modules (empty, singletons, V).
inline bool is_modular_prime(const UGraph& g) {
    detail::require_small(g, "is_modular_prime");
    const int n = g.size();
    auto nb = detail::neighbour_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
        if (std::popcount(mask) < 2) continue;
        if (detail::module_mask(nb, mask)) return false;
    }
    return true;
}

// Cut (side1, side2) whose cut-set is complete bipartite.
inline bool is_split(const UGraph& g, const std::vector<int>& side1, const std::vector<int>& side2) {
    std::vector<int> lab(g.size(), -1);
    for (int v : side1) g.check(v), lab[v] = 0;
    for (int v : side2) {
        g.check(v);
        if (lab[v] == 0) throw std::invalid_argument("is_split: vertex " + std::to_string(v + 1) + " on both sides");
        lab[v] = 1;
    }
    for (int v = 0; v < g.size(); ++v)
        if (lab[v] < 0) throw std::invalid_argument("is_split: vertex " + std::to_string(v + 1) + " on neither side");
    std::vector<int> fa, fb;
    for (int v = 0; v < g.size(); ++v) {
        bool cross = false;
        for (int u : g.neighbors(v)) cross |= lab[u] != lab[v];
        if (cross) (lab[v] == 0 ? fa : fb).push_back(v);
    }
    for (int a : fa)
        for (int b : fb)
            if (!g.has_edge(a, b)) return false;
    return true;
}

// Only trivial splits (one side of size <= 1).
inline bool is_split_prime(const UGraph& g) {
    detail::require_small(g, "is_split_prime");
    const int n = g.size();
    if (n < 4) return true;
    auto nb = detail::neighbour_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    // vertex n-1 fixed on the complement side
    for (std::uint32_t side = 1; side < (1u << (n - 1)); ++side) {
        int s = std::popcount(side);
        if (s < 2 || n - s < 2) continue;
        if (detail::split_mask(nb, side & all)) return false;
    }
    return true;
}

}  // namespace interlim
