#pragma once

#include "../combinat/dyck.hpp"
#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "ugraph.hpp"

namespace interlim {

// edge i~j iff {i, j} is an inversion of p
inline UGraph inversion_graph(const Permutation& p) {
    const int n = p.size();
    UGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] > p[j]) g.add_edge(i, j);
    return g;
}

// Vertices are chords ordered by smaller endpoint; edges join crossing chords.
inline UGraph circle_graph(const Matching& m) {
    auto ch = m.chords();
    const int n = static_cast<int>(ch.size());
    UGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            // ch sorted by left endpoint, so only l_i < l_j < r_i < r_j can occur
            if (ch[j].first < ch[i].second && ch[i].second < ch[j].second) g.add_edge(i, j);
    return g;
}

// v_i ~ v_j (i < j) iff j <= i + f_w(i)
inline UGraph unit_interval_graph(const DyckPath& w) {
    auto f = f_sequence(w);
    const int n = w.size();
    UGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= i + f[i] && j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace interlim
