#pragma once

#include "../combinat/dyck.hpp"
#include "../core/bigcount.hpp"
#include "../core/random.hpp"
#include "../graphs/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Connected unit interval graphs on n vertices: (Catalan(n-1) + binom(n-1, floor((n-1)/2))) / 2.
inline BigCount count_connected_unit_interval_graphs(int n) {
    if (n < 1) throw std::invalid_argument("count_connected_unit_interval_graphs: n must be >= 1");
    return (catalan(n - 1) + binomial(n - 1, (n - 1) / 2)) / 2;
}

// All unit interval graphs via the Euler transform: n U_n = sum_k b_k U_{n-k},
// b_k = sum_{d | k} d C_d.
inline std::vector<BigCount> unit_interval_counts_upto(int n) {
    if (n < 0) throw std::invalid_argument("unit_interval_counts_upto: n must be >= 0");
    std::vector<BigCount> C(n + 1, 0), b(n + 1, 0), U(n + 1, 0);
    for (int d = 1; d <= n; ++d) C[d] = count_connected_unit_interval_graphs(d);
    for (int d = 1; d <= n; ++d)
        for (int k = d; k <= n; k += d) b[k] += BigCount(d) * C[d];
    U[0] = 1;
    for (int j = 1; j <= n; ++j) {
        BigCount s = 0;
        for (int k = 1; k <= j; ++k) s += b[k] * U[j - k];
        U[j] = s / j;
    }
    return U;
}

inline BigCount count_unit_interval_graphs(int n) { return unit_interval_counts_upto(n).at(n); }

// Uniform connected unit interval graph, as a canonical irreducible Dyck
// path: each connected graph has one or two irreducible representatives,
// mirrors of each other, so non-palindromic draws are thinned by 1/2.
inline DyckPath sample_connected_unit_interval_graph(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_connected_unit_interval_graph: n must be >= 1");
    for (;;) {
        DyckPath w = sample_irreducible_dyck(n, rng);
        DyckPath wb = mirror(w);
        if (w == wb) return w;
        if (rng.coin()) return std::min(w, wb);
    }
}

struct UnitIntervalSample {
    DyckPath word;                     // concatenation of the component words
    std::vector<int> component_sizes;  // in the order they appear in word
};

// Uniform unlabeled unit interval graph by the recursive multiset
// construction. Counts are held as long doubles scaled by 4^-j so that
// n in the tens of thousands stays in range; only ratios are used.
class UnitIntervalSampler {
public:
    explicit UnitIntervalSampler(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("UnitIntervalSampler: n must be >= 1");
        c_.assign(n + 1, 0.0L);
        long double cat = 0.25L;  // Catalan(j) / 4^(j+1), j = d - 1
        long double cen = 0.25L;  // binom(j, floor(j/2)) / 4^(j+1)
        for (int d = 1; d <= n; ++d) {
            const int j = d - 1;
            c_[d] = 0.5L * (cat + cen);
            cat = cat * 2.0L * (2 * j + 1) / ((j + 2) * 4.0L);
            cen = cen * ((j % 2 == 0) ? (long double)(j + 1) / (j / 2 + 1) : 2.0L) / 4.0L;
        }
        divisors_.assign(n + 1, {});
        for (int d = 1; d <= n; ++d)
            for (int k = d; k <= n; k += d) divisors_[k].push_back(d);
        beta_.assign(n + 1, 0.0L);
        for (int k = 1; k <= n; ++k)
            for (int d : divisors_[k]) beta_[k] += d * c_[d] * pow4(d - k);
        u_.assign(n + 1, 0.0L);
        u_[0] = 1.0L;
        for (int j = 1; j <= n; ++j) {
            long double s = 0.0L;
            for (int k = 1; k <= j; ++k) s += beta_[k] * u_[j - k];
            u_[j] = s / j;
        }
    }

    int size() const { return n_; }

    // Exact P(largest component has >= s vertices) for 2s > n, where the
    // large component is unique: sum_{t >= s} C_t U_{n-t} / U_n.
    double prob_largest_at_least(int s) const {
        if (2 * s <= n_ || s > n_) throw std::invalid_argument("prob_largest_at_least: need n/2 < s <= n");
        long double p = 0.0L;
        for (int t = s; t <= n_; ++t) p += c_[t] * u_[n_ - t];
        return static_cast<double>(p / u_[n_]);
    }

    UnitIntervalSample sample(Rng& rng) const {
        UnitIntervalSample out;
        std::string word;
        int r = n_;
        while (r > 0) {
            long double target = rng.uniform() * r * u_[r];
            int k = r, d = r;
            bool chosen = false;
            for (int kk = r; kk >= 1 && !chosen; --kk) {
                for (int dd : divisors_[kk]) {
                    long double wgt = dd * c_[dd] * pow4(dd - kk) * u_[r - kk];
                    if (target < wgt) {
                        k = kk, d = dd, chosen = true;
                        break;
                    }
                    target -= wgt;
                    k = kk, d = dd;  // rounding fallback: last visited cell
                }
            }
            DyckPath comp = sample_connected_unit_interval_graph(d, rng);
            for (int t = 0; t < k / d; ++t) {
                word += comp.to_string();
                out.component_sizes.push_back(d);
            }
            r -= k;
        }
        out.word = DyckPath::from_string(word);
        return out;
    }

private:
    static long double pow4(int e) { return std::ldexp(1.0L, 2 * e); }

    int n_;
    std::vector<long double> c_, beta_, u_;
    std::vector<std::vector<int>> divisors_;
};

inline UnitIntervalSample sample_unit_interval_word(int n, Rng& rng) { return UnitIntervalSampler(n).sample(rng); }

inline UGraph sample_unit_interval_graph(int n, Rng& rng) {
    return unit_interval_graph(sample_unit_interval_word(n, rng).word);
}

}  // namespace interlim
