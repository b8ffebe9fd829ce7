#pragma once

#include "../core/random.hpp"
#include "../graphs/canonical.hpp"
#include "graphon.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace interlim {

// Sample_k(W_G): k vertices drawn uniformly with replacement; a repeated
// vertex is not adjacent to its copy (A_ii = 0).
inline UGraph sample_from_graph(const UGraph& g, int k, Rng& rng) {
    if (g.size() == 0) throw std::invalid_argument("sample_from_graph: empty graph");
    std::vector<int> v(k);
    for (auto& x : v) x = static_cast<int>(rng.below(g.size()));
    UGraph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (v[i] != v[j] && g.has_edge(v[i], v[j])) h.add_edge(i, j);
    return h;
}

struct ProxyResult {
    double value = 0.0;   // max over classes of |p_G(F) - p_W(F)|
    double stderr_ = 0.0; // standard error of the maximising difference
};

// Subgraph-distribution distance between W_G and W over small class sizes.
// This is a Monte Carlo proxy, not the cut distance.
inline ProxyResult density_distance_proxy(const UGraph& g, const LimitGraphon& W, const std::vector<int>& test_sizes,
                                          std::size_t mc_samples, Rng& rng) {
    if (mc_samples == 0) throw std::invalid_argument("density_distance_proxy: mc_samples must be positive");
    ProxyResult r;
    for (int k : test_sizes) {
        if (k < 1 || k > 5) throw std::invalid_argument("density_distance_proxy: test sizes must lie in 1..5");
        std::map<CanonicalForm, std::pair<double, double>> freq;
        for (std::size_t s = 0; s < mc_samples; ++s) {
            freq[canonical_form(sample_from_graph(g, k, rng))].first += 1.0;
            freq[canonical_form(sample_graph(W, k, rng))].second += 1.0;
        }
        for (auto& [c, pq] : freq) {
            double p = pq.first / mc_samples, q = pq.second / mc_samples;
            double d = std::fabs(p - q);
            if (d > r.value) {
                r.value = d;
                r.stderr_ = std::sqrt((p * (1 - p) + q * (1 - q)) / mc_samples);
            }
        }
    }
    return r;
}

}  // namespace interlim
