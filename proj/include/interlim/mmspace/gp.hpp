#pragma once

#include "../combinat/dyck.hpp"
#include "../core/random.hpp"
#include "../graphs/distance.hpp"
#include "excursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace interlim {

struct GpBoxEstimate {
    double discrepancy = 0.0;
    double mass_defect = 0.0;
    double box_bound() const { return std::max(discrepancy, mass_defect); }
};

// Relation {(v_{1+floor(xn)}, x) : delta <= x <= 1 - delta} on grid points x = i/m
// between (V, d_G / sqrt(n)) and ([0,1], d_e / sqrt(2)). The excursion is
// either the path's own rescaled height (coupled) or an independent sample.
inline GpBoxEstimate gp_box_estimate_unit(const DyckPath& w, bool e_from_w, double delta, int m, Rng& rng) {
    if (!w.irreducible()) throw std::invalid_argument("gp_box_estimate_unit: reducible Dyck path");
    if (!(delta > 0.0) || delta > 0.5) throw std::invalid_argument("gp_box_estimate_unit: delta must lie in (0, 1/2]");
    if (m < 2) throw std::invalid_argument("gp_box_estimate_unit: m must be >= 2");
    GpBoxEstimate r;
    r.mass_defect = std::min(1.0, 2.0 * delta);
    const int lo = static_cast<int>(std::ceil(delta * m - 1e-9));
    const int hi = static_cast<int>(std::floor((1.0 - delta) * m + 1e-9));
    if (hi - lo < 1) return r;
    if (lo < 1 || hi > m - 1)
        throw std::invalid_argument("gp_box_estimate_unit: delta < 1/m puts the relation on the grid boundary");

    const int n = w.size();
    ExcursionGrid e = e_from_w ? dyck_height_grid(w, m) : sample_excursion(m, rng);
    ExcursionMetric metric(e);
    auto f = f_sequence(w);
    const double gscale = 1.0 / std::sqrt(static_cast<double>(n));
    const double cscale = 1.0 / std::sqrt(2.0);

    std::vector<int> vert;
    for (int g = lo; g <= hi; ++g) vert.push_back(std::min<long long>(n - 1, static_cast<long long>(n) * g / m));
    for (int a = 0; a + 1 < static_cast<int>(vert.size()); ++a) {
        auto d = unit_distances_forward(f, vert[a]);
        const double Fa = metric.primitive_at_grid(lo + a);
        for (int b = a + 1; b < static_cast<int>(vert.size()); ++b) {
            double dg = d[vert[b]] * gscale;
            double dc = (metric.primitive_at_grid(lo + b) - Fa) * cscale;
            r.discrepancy = std::max(r.discrepancy, std::fabs(dg - dc));
        }
    }
    return r;
}

// d_G(v_{1+floor(Un)}, v_{1+floor(Vn)}) / sqrt(n) for U, V uniform on [delta, 1 - delta].
inline double two_point_graph_distance(const DyckPath& w, double delta, Rng& rng) {
    const int n = w.size();
    double x = delta + (1 - 2 * delta) * rng.uniform();
    double y = delta + (1 - 2 * delta) * rng.uniform();
    int i = std::min<int>(n - 1, static_cast<int>(std::floor(x * n)));
    int j = std::min<int>(n - 1, static_cast<int>(std::floor(y * n)));
    if (i == j) return 0.0;
    return unit_distance_formula(w, i + 1, j + 1) / std::sqrt(static_cast<double>(n));
}

// d_e(U, V) / sqrt(2) for U, V uniform on [delta, 1 - delta].
inline double two_point_excursion_distance(const ExcursionGrid& e, double delta, Rng& rng) {
    double x = delta + (1 - 2 * delta) * rng.uniform();
    double y = delta + (1 - 2 * delta) * rng.uniform();
    return excursion_distance(e, x, y, delta) / std::sqrt(2.0);
}

}  // namespace interlim
