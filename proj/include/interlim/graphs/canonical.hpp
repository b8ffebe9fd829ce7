#pragma once

#include "ugraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

inline constexpr int kCanonicalMaxN = 8;

// Minimal upper-triangle adjacency bit string (row-major, first pair is the
// most significant bit) over relabelings that list vertices by decreasing
// degree. The degree constraint is itself invariant, so equal codes still
// characterize isomorphism.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;

    bool operator==(const CanonicalForm& o) const { return n == o.n && code == o.code; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
    bool operator<(const CanonicalForm& o) const { return n != o.n ? n < o.n : code < o.code; }

    std::string to_string() const {
        std::string s;
        for (int b = n * (n - 1) / 2 - 1; b >= 0; --b) s += (code >> b & 1) ? '1' : '0';
        return std::to_string(n) + ":" + s;
    }
};

inline CanonicalForm canonical_form(const UGraph& g) {
    const int n = g.size();
    if (n > kCanonicalMaxN)
        throw std::invalid_argument("canonical_form: n=" + std::to_string(n) + " exceeds the exhaustive limit " +
                                    std::to_string(kCanonicalMaxN));
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    // class boundaries
    std::vector<std::pair<int, int>> cls;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[ord[j]] == deg[ord[i]]) ++j;
        cls.emplace_back(i, j);
        i = j;
    }
    bool adj[kCanonicalMaxN][kCanonicalMaxN];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = i != j && g.has_edge(i, j);

    std::uint64_t best = ~0ULL;
    auto code_of = [&]() {
        std::uint64_t c = 0;
        for (int s = 0; s < n; ++s)
            for (int t = s + 1; t < n; ++t) c = (c << 1) | (adj[ord[s]][ord[t]] ? 1u : 0u);
        return c;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == cls.size()) {
            best = std::min(best, code_of());
            return;
        }
        auto [a, b] = cls[ci];
        std::sort(ord.begin() + a, ord.begin() + b);
        do {
            rec(ci + 1);
        } while (std::next_permutation(ord.begin() + a, ord.begin() + b));
    };
    rec(0);
    return {n, n < 2 ? 0 : best};
}

inline bool isomorphic(const UGraph& a, const UGraph& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace interlim
