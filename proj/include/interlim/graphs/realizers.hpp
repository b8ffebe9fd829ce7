#pragma once

#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "builders.hpp"
#include "canonical.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

inline constexpr int kPermRealizerMaxN = 7;
inline constexpr int kMatchingRealizerMaxN = 6;

// All permutations p of size |g| with G_p isomorphic to g.
inline std::vector<Permutation> enumerate_realizers_perm(const UGraph& g) {
    if (g.size() > kPermRealizerMaxN)
        throw std::invalid_argument("enumerate_realizers_perm: n=" + std::to_string(g.size()) + " exceeds " +
                                    std::to_string(kPermRealizerMaxN));
    std::vector<Permutation> out;
    if (g.size() == 0) return out;
    auto target = canonical_form(g);
    for_each_permutation(g.size(), [&](const Permutation& p) {
        if (canonical_form(inversion_graph(p)) == target) out.push_back(p);
    });
    return out;
}

// All matchings m of size |g| with G_m isomorphic to g.
inline std::vector<Matching> enumerate_realizers_matching(const UGraph& g) {
    if (g.size() > kMatchingRealizerMaxN)
        throw std::invalid_argument("enumerate_realizers_matching: n=" + std::to_string(g.size()) + " exceeds " +
                                    std::to_string(kMatchingRealizerMaxN));
    std::vector<Matching> out;
    if (g.size() == 0) return out;
    auto target = canonical_form(g);
    for_each_matching(g.size(), [&](const Matching& m) {
        if (canonical_form(circle_graph(m)) == target) out.push_back(m);
    });
    return out;
}

// Realizer lists of every permutation graph on n vertices, keyed by class.
// Same answer as calling enumerate_realizers_perm once per class.
inline std::map<CanonicalForm, std::vector<Permutation>> permutation_graph_classes(int n) {
    if (n > kPermRealizerMaxN) throw std::invalid_argument("permutation_graph_classes: n too large");
    std::map<CanonicalForm, std::vector<Permutation>> out;
    for_each_permutation(n, [&](const Permutation& p) { out[canonical_form(inversion_graph(p))].push_back(p); });
    return out;
}

inline std::map<CanonicalForm, std::vector<Matching>> circle_graph_classes(int n) {
    if (n > kMatchingRealizerMaxN) throw std::invalid_argument("circle_graph_classes: n too large");
    std::map<CanonicalForm, std::vector<Matching>> out;
    for_each_matching(n, [&](const Matching& m) { out[canonical_form(circle_graph(m))].push_back(m); });
    return out;
}

}  // namespace interlim
