#pragma once

#include "../core/random.hpp"
#include "../graphs/distance.hpp"
#include "../graphs/ugraph.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interlim {

// Finite metric measure space: distance matrix plus probability weights.
class FiniteMmSpace {
public:
    static constexpr double kTol = 1e-9;
    static constexpr int kFullTriangleCheckMaxN = 200;

    FiniteMmSpace(std::vector<double> dist, std::vector<double> weights)
        : n_(static_cast<int>(weights.size())), d_(std::move(dist)), w_(std::move(weights)) {
        validate();
    }

    int size() const { return n_; }
    double d(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    double weight(int i) const { return w_[i]; }
    const std::vector<double>& weights() const { return w_; }

private:
    void validate() const {
        if (n_ == 0) throw std::invalid_argument("FiniteMmSpace: empty space");
        if (d_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("FiniteMmSpace: distance matrix is not n x n");
        double s = 0.0;
        for (double w : w_) {
            if (!(w >= 0)) throw std::invalid_argument("FiniteMmSpace: negative weight");
            s += w;
        }
        if (std::fabs(s - 1.0) > 1e-12) throw std::invalid_argument("FiniteMmSpace: weights do not sum to 1");
        for (int i = 0; i < n_; ++i) {
            if (d(i, i) != 0.0) throw std::invalid_argument("FiniteMmSpace: nonzero diagonal at " + std::to_string(i + 1));
            for (int j = i + 1; j < n_; ++j) {
                if (!(d(i, j) >= 0) || std::fabs(d(i, j) - d(j, i)) > kTol)
                    throw std::invalid_argument("FiniteMmSpace: not a symmetric nonnegative matrix at (" +
                                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
        auto triangle = [&](int i, int j, int k) {
            if (d(i, k) > d(i, j) + d(j, k) + kTol)
                throw std::invalid_argument("FiniteMmSpace: triangle inequality fails at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        };
        if (n_ <= kFullTriangleCheckMaxN) {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    for (int k = 0; k < n_; ++k) triangle(i, j, k);
        } else {
            Rng rng(0x7ea1);
            for (int t = 0; t < 20000; ++t)
                triangle(static_cast<int>(rng.below(n_)), static_cast<int>(rng.below(n_)), static_cast<int>(rng.below(n_)));
        }
    }

    int n_;
    std::vector<double> d_;
    std::vector<double> w_;
};

// (V, scale * d_G, uniform)
inline FiniteMmSpace from_graph(const UGraph& g, double scale) {
    if (!(scale > 0)) throw std::invalid_argument("from_graph: scale must be positive");
    const int n = g.size();
    std::vector<double> dist(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
        auto d = bfs_from(g, s);
        for (int t = 0; t < n; ++t) {
            if (!d[t]) throw std::invalid_argument("from_graph: graph is disconnected");
            dist[static_cast<std::size_t>(s) * n + t] = scale * *d[t];
        }
    }
    return FiniteMmSpace(std::move(dist), std::vector<double>(n, 1.0 / n));
}

// sup over related pairs |d1(x1, y1) - d2(x2, y2)|
inline double box_discrepancy(const FiniteMmSpace& s1, const FiniteMmSpace& s2,
                              const std::vector<std::pair<int, int>>& relation) {
    if (relation.empty()) throw std::invalid_argument("box_discrepancy: empty relation");
    for (auto [a, b] : relation)
        if (a < 0 || a >= s1.size() || b < 0 || b >= s2.size())
            throw std::out_of_range("box_discrepancy: relation index out of range");
    double best = 0.0;
    for (std::size_t p = 0; p < relation.size(); ++p)
        for (std::size_t q = p + 1; q < relation.size(); ++q)
            best = std::max(best, std::fabs(s1.d(relation[p].first, relation[q].first) -
                                            s2.d(relation[p].second, relation[q].second)));
    return best;
}

// Distances among k i.i.d. weight-distributed points.
inline std::vector<std::vector<double>> sampled_distance_matrix(const FiniteMmSpace& s, int k, Rng& rng) {
    if (k < 2) throw std::invalid_argument("sampled_distance_matrix: k must be >= 2");
    std::discrete_distribution<int> pick(s.weights().begin(), s.weights().end());
    std::vector<int> v(k);
    for (auto& x : v) x = pick(rng.engine());
    std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = s.d(v[i], v[j]);
    return m;
}

}  // namespace interlim
