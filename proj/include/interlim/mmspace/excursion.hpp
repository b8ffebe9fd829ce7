#pragma once

#include "../combinat/dyck.hpp"
#include "../core/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Nonnegative excursion sampled on the grid t_i = i / m.
struct ExcursionGrid {
    std::vector<double> values;

    int m() const { return static_cast<int>(values.size()) - 1; }

    static ExcursionGrid from_values(std::vector<double> v) {
        if (v.size() < 3) throw std::invalid_argument("ExcursionGrid: need at least 3 grid values");
        if (v.front() != 0.0 || v.back() != 0.0) throw std::invalid_argument("ExcursionGrid: endpoints must be 0");
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!(v[i] >= 0.0)) throw std::invalid_argument("ExcursionGrid: negative value at index " + std::to_string(i));
        return ExcursionGrid{std::move(v)};
    }
};

// Fine Gaussian steps per grid cell. Without refinement the grid minimum
// overshoots the true bridge minimum by ~0.58/sqrt(m) and biases the
// excursion low by the same amount.
inline constexpr int kExcursionRefinement = 8;

// Vervaat transform of a Gaussian random-walk bridge: rotate the bridge so
// its minimum sits at time 0 and subtract it.
inline ExcursionGrid sample_excursion(int m, Rng& rng, int refinement = kExcursionRefinement) {
    if (m < 2) throw std::invalid_argument("sample_excursion: m must be >= 2");
    if (refinement < 1) throw std::invalid_argument("sample_excursion: refinement must be >= 1");
    const int M = m * refinement;
    const double sd = 1.0 / std::sqrt(static_cast<double>(M));
    std::vector<double> b(M + 1, 0.0);
    for (int i = 1; i <= M; ++i) b[i] = b[i - 1] + sd * rng.normal();
    const double end = b[M];
    int tau = 0;
    for (int i = 0; i < M; ++i) {
        b[i] -= end * i / M;
        if (b[i] < b[tau]) tau = i;
    }
    std::vector<double> v(m + 1, 0.0);
    for (int g = 1; g < m; ++g) v[g] = b[(tau + g * refinement) % M] - b[tau];
    return ExcursionGrid{std::move(v)};
}

// Grid of the rescaled Dyck height: e(x) = h_w(floor(nx)) / sqrt(2n), with
// h_w(i) the arrival height of the i-th up step and zero endpoints.
inline ExcursionGrid dyck_height_grid(const DyckPath& w, int m) {
    if (m < 2) throw std::invalid_argument("dyck_height_grid: m must be >= 2");
    auto h = heights(w).h;
    const int n = w.size();
    const double s = 1.0 / std::sqrt(2.0 * n);
    std::vector<double> v(m + 1, 0.0);
    for (int g = 1; g < m; ++g) {
        long long i = static_cast<long long>(n) * g / m;
        v[g] = i >= 1 ? h[i - 1] * s : 0.0;
    }
    return ExcursionGrid{std::move(v)};
}

// Trapezoidal integral of e^k.
inline double excursion_integral(const ExcursionGrid& e, int k) {
    if (k < 1) throw std::invalid_argument("excursion_integral: k must be >= 1");
    const int m = e.m();
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
        double v = std::pow(e.values[i], k);
        s += (i == 0 || i == m) ? 0.5 * v : v;
    }
    return s / m;
}

// Integral of the piecewise-linear interpolant of 1/e, precomputed for
// repeated queries. Defined on [1/m, 1 - 1/m] where 1/e is finite.
class ExcursionMetric {
public:
    explicit ExcursionMetric(const ExcursionGrid& e) : m_(e.m()), g_(m_ + 1, 0.0), F_(m_ + 1, 0.0) {
        for (int i = 1; i < m_; ++i) {
            if (!(e.values[i] > 0.0))
                throw std::domain_error("excursion metric: excursion vanishes at interior grid point " + std::to_string(i));
            g_[i] = 1.0 / e.values[i];
        }
        for (int i = 2; i < m_; ++i) F_[i] = F_[i - 1] + 0.5 * (g_[i - 1] + g_[i]) / m_;
    }

    int m() const { return m_; }

    // primitive from t = 1/m
    double primitive(double t) const {
        const double u = t * m_;
        if (u < 1.0 - 1e-12 || u > m_ - 1 + 1e-12)
            throw std::domain_error("excursion metric: point too close to the boundary for this grid");
        int i = std::clamp(static_cast<int>(std::floor(u)), 1, m_ - 1);
        if (i == m_ - 1) return F_[m_ - 1];
        double a = std::clamp(u - i, 0.0, 1.0);
        return F_[i] + a * (g_[i] + 0.5 * a * (g_[i + 1] - g_[i])) / m_;
    }

    double primitive_at_grid(int i) const { return F_[i]; }

    double distance(double x, double y) const { return std::fabs(primitive(y) - primitive(x)); }

private:
    int m_;
    std::vector<double> g_;
    std::vector<double> F_;
};

// d_e(x, y) = int_x^y dt / e(t) for delta <= x <= y <= 1 - delta.
inline double excursion_distance(const ExcursionGrid& e, double x, double y, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("excursion_distance: delta must be positive");
    if (x > y) std::swap(x, y);
    if (x < delta || y > 1.0 - delta)
        throw std::invalid_argument("excursion_distance: points must lie in [delta, 1 - delta]");
    if (x == y) return 0.0;
    return ExcursionMetric(e).distance(x, y);
}

}  // namespace interlim
