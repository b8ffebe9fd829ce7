#pragma once

#include "../combinat/decomposition.hpp"
#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "../core/bigcount.hpp"
#include "../core/parallel.hpp"
#include "../core/stats.hpp"
#include "../graphon/graphon.hpp"
#include "../graphon/step.hpp"
#include "../graphs/builders.hpp"
#include "../graphs/cliques.hpp"
#include "../graphs/distance.hpp"
#include "../mmspace/excursion.hpp"
#include "../mmspace/gp.hpp"
#include "report.hpp"
#include "unit_interval.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Mean of #K_k / binom(n, k) over uniform seeds of size n.
inline Report mc_clique_density(Family family, int n, int k, std::size_t reps, std::uint64_t seed, double tolerance = 0.01,
                                unsigned threads = 0) {
    if (k < 1 || k > 5) throw std::invalid_argument("mc_clique_density: k must lie in 1..5");
    if (n < k || n > 3000) throw std::invalid_argument("mc_clique_density: n must lie in k..3000");
    if (reps == 0) throw std::invalid_argument("mc_clique_density: reps must be positive");
    const double norm = binomial(n, k).convert_to<double>();
    std::vector<double> vals(reps);
    for_each_rep(reps, seed, threads, [&](std::size_t r, Rng& rng) {
        std::uint64_t c = family == Family::perm ? count_cliques_perm(sample_permutation(n, rng), k)
                                                 : count_cliques_circle(sample_matching(n, rng), k);
        vals[r] = c / norm;
    });
    auto ms = mean_stderr(vals);
    const double target = clique_density(family, k).convert_to<double>();
    Report rep;
    rep.name = "clique_density";
    rep.params = {{"family", family_name(family)}, {"n", n}, {"k", k}, {"reps", reps}};
    rep.seed = seed;
    rep.add("density", ms.mean, ms.stderr_);
    rep.add("limit", target);
    rep.threshold = {{"abs_tolerance", tolerance}};
    rep.pass = std::fabs(ms.mean - target) <= tolerance;
    return rep;
}

struct PoissonTolerances {
    double mean = 0.05;
    double zero = 0.01;
    double moment = 0.1;
};

// Joint law of (x, y, z) on uniform matchings against independent Poisson(1).
inline Report mc_poisson_xyz(int n, std::size_t reps, int max_moment, std::uint64_t seed, PoissonTolerances tol = {},
                             unsigned threads = 0) {
    if (n < 4) throw std::invalid_argument("mc_poisson_xyz: n must be >= 4");
    if (reps == 0) throw std::invalid_argument("mc_poisson_xyz: reps must be positive");
    std::vector<Xyz> s(reps);
    for_each_rep(reps, seed, threads, [&](std::size_t r, Rng& rng) { s[r] = xyz_stats(sample_matching(n, rng)); });
    Report rep;
    rep.name = "poisson_xyz";
    rep.params = {{"n", n}, {"reps", reps}, {"max_moment", max_moment}};
    rep.seed = seed;
    rep.threshold = {{"mean_abs_tolerance", tol.mean}, {"zero_prob_abs_tolerance", tol.zero},
                     {"factorial_moment_abs_tolerance", tol.moment}};
    auto falling = [](int v, int r) {
        double p = 1.0;
        for (int t = 0; t < r; ++t) p *= (v - t);
        return p;
    };
    bool pass = true;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> v(reps);
        for (std::size_t r = 0; r < reps; ++r) v[r] = c == 0 ? s[r].x : c == 1 ? s[r].y : s[r].z;
        auto ms = mean_stderr(v);
        rep.add(std::string("mean_") + "xyz"[c], ms.mean, ms.stderr_);
        pass &= std::fabs(ms.mean - 1.0) <= tol.mean;
    }
    {
        std::vector<double> v(reps);
        for (std::size_t r = 0; r < reps; ++r) v[r] = (s[r].x == 0 && s[r].y == 0 && s[r].z == 0) ? 1.0 : 0.0;
        auto ms = mean_stderr(v);
        rep.add("p_000", ms.mean, ms.stderr_);
        rep.add("p_000_limit", std::exp(-3.0));
        pass &= std::fabs(ms.mean - std::exp(-3.0)) <= tol.zero;
    }
    for (int a = 0; a <= max_moment; ++a)
        for (int b = 0; a + b <= max_moment; ++b)
            for (int c = 0; a + b + c <= max_moment; ++c) {
                if (a + b + c == 0) continue;
                std::vector<double> v(reps);
                for (std::size_t r = 0; r < reps; ++r)
                    v[r] = falling(s[r].x, a) * falling(s[r].y, b) * falling(s[r].z, c);
                auto ms = mean_stderr(v);
                rep.add("factorial_moment_" + std::to_string(a) + std::to_string(b) + std::to_string(c), ms.mean,
                        ms.stderr_);
                pass &= std::fabs(ms.mean - 1.0) <= tol.moment;
            }
    rep.pass = pass;
    return rep;
}

inline Report mc_indecomposable_rate(int n, std::size_t reps, std::uint64_t seed, double tolerance = 0.01,
                                     unsigned threads = 0) {
    if (n < 1) throw std::invalid_argument("mc_indecomposable_rate: n must be >= 1");
    if (reps == 0) throw std::invalid_argument("mc_indecomposable_rate: reps must be positive");
    std::vector<double> v(reps);
    for_each_rep(reps, seed, threads,
                 [&](std::size_t r, Rng& rng) { v[r] = is_indecomposable(sample_matching(n, rng)) ? 1.0 : 0.0; });
    auto ms = mean_stderr(v);
    Report rep;
    rep.name = "indecomposable_rate";
    rep.params = {{"n", n}, {"reps", reps}};
    rep.seed = seed;
    rep.add("rate", ms.mean, ms.stderr_);
    rep.add("limit", std::exp(-3.0));
    rep.add("lower_bound", std::exp(-4.0));
    rep.threshold = {{"abs_tolerance", tolerance}, {"strict_lower_bound", std::exp(-4.0)}};
    rep.pass = std::fabs(ms.mean - std::exp(-3.0)) <= tolerance && ms.mean > std::exp(-4.0);
    return rep;
}

// Histogram of n - L_n for uniform unit interval graphs.
inline Report largest_component_stats(int n, std::size_t reps, std::uint64_t seed, int deficiency_cut = 10,
                                      double level = 0.95, unsigned threads = 0) {
    if (reps == 0) throw std::invalid_argument("largest_component_stats: reps must be positive");
    UnitIntervalSampler sampler(n);
    std::vector<int> def(reps);
    for_each_rep(reps, seed, threads, [&](std::size_t r, Rng& rng) {
        auto s = sampler.sample(rng);
        def[r] = n - *std::max_element(s.component_sizes.begin(), s.component_sizes.end());
    });
    std::map<int, std::size_t> hist;
    std::size_t within = 0;
    for (int d : def) {
        ++hist[d];
        within += d <= deficiency_cut;
    }
    Report rep;
    rep.name = "largest_component";
    rep.params = {{"n", n}, {"reps", reps}};
    rep.seed = seed;
    const double p = static_cast<double>(within) / reps;
    rep.add("p_deficiency_le_cut", p, std::sqrt(p * (1 - p) / reps));
    std::vector<double> dv(def.begin(), def.end());
    auto ms = mean_stderr(dv);
    rep.add("mean_deficiency", ms.mean, ms.stderr_);
    if (2 * deficiency_cut < n) rep.add("p_deficiency_le_cut_exact", sampler.prob_largest_at_least(n - deficiency_cut));
    rep.threshold = {{"deficiency_cut", deficiency_cut}, {"min_probability", level}, {"empirical", true}};
    nlohmann::json h = nlohmann::json::object();
    for (auto [d, c] : hist) h[std::to_string(d)] = c;
    rep.details["histogram"] = h;
    rep.pass = p > level;
    return rep;
}

// Total variation distance between two deficiency histograms.
inline double histogram_tv(const nlohmann::json& a, const nlohmann::json& b) {
    double na = 0, nb = 0;
    for (auto& [k, v] : a.items()) na += v.get<double>();
    for (auto& [k, v] : b.items()) nb += v.get<double>();
    std::map<std::string, std::pair<double, double>> all;
    for (auto& [k, v] : a.items()) all[k].first = v.get<double>() / na;
    for (auto& [k, v] : b.items()) all[k].second = v.get<double>() / nb;
    double tv = 0;
    for (auto& [k, pq] : all) tv += std::fabs(pq.first - pq.second);
    return 0.5 * tv;
}

// Rescaled clique counts #K_k / n^{(k+1)/2} of uniform unit interval graphs
// against 2^{(k-1)/2} / (k-1)! * X_{k-1}, X_j = int e^j.
inline Report mc_unit_clique_scaling(int n, int k_max, std::size_t reps, int m_grid, std::uint64_t seed,
                                     double ks_tolerance = 0.05, unsigned threads = 0) {
    if (k_max < 2 || k_max > 6) throw std::invalid_argument("mc_unit_clique_scaling: k_max must lie in 2..6");
    if (reps < 2) throw std::invalid_argument("mc_unit_clique_scaling: reps must be >= 2");
    UnitIntervalSampler sampler(n);
    const int K = k_max - 1;
    std::vector<std::vector<double>> graph(K, std::vector<double>(reps)), cont(K, std::vector<double>(reps));
    // graph side and continuum side use disjoint stream families
    const std::uint64_t gseed = derive_seed(seed, 1), cseed = derive_seed(seed, 2);
    for_each_rep(reps, gseed, threads, [&](std::size_t r, Rng& rng) {
        auto f = f_sequence(sampler.sample(rng).word);
        for (int k = 2; k <= k_max; ++k)
            graph[k - 2][r] = count_cliques_unit_double(f, k) / std::pow(static_cast<double>(n), (k + 1) / 2.0);
    });
    for_each_rep(reps, cseed, threads, [&](std::size_t r, Rng& rng) {
        auto e = sample_excursion(m_grid, rng);
        for (int k = 2; k <= k_max; ++k)
            cont[k - 2][r] = std::pow(2.0, (k - 1) / 2.0) / std::tgamma(k) * excursion_integral(e, k - 1);
    });
    Report rep;
    rep.name = "unit_clique_scaling";
    rep.params = {{"n", n}, {"k_max", k_max}, {"reps", reps}, {"m_grid", m_grid}};
    rep.seed = seed;
    rep.threshold = {{"ks_max", ks_tolerance}};
    bool pass = true;
    for (int k = 2; k <= k_max; ++k) {
        auto a = mean_stderr(graph[k - 2]), b = mean_stderr(cont[k - 2]);
        double ks = ks_statistic(graph[k - 2], cont[k - 2]);
        rep.add("k" + std::to_string(k) + "_graph_mean", a.mean, a.stderr_);
        rep.add("k" + std::to_string(k) + "_excursion_mean", b.mean, b.stderr_);
        rep.add("k" + std::to_string(k) + "_ks", ks);
        pass &= ks < ks_tolerance;
    }
    if (k_max >= 3) rep.add("corr_k2_k3", pearson(graph[0], graph[1]));
    rep.pass = pass;
    return rep;
}

// Two-point law of the rescaled graph distance against d_e / sqrt(2).
inline Report mc_two_point_law(int n, int m_grid, std::size_t draws, double delta, std::uint64_t seed,
                               double ks_tolerance = 0.05, unsigned threads = 0) {
    if (draws < 2) throw std::invalid_argument("mc_two_point_law: draws must be >= 2");
    std::vector<double> a(draws), b(draws);
    for_each_rep(draws, derive_seed(seed, 1), threads, [&](std::size_t r, Rng& rng) {
        a[r] = two_point_graph_distance(sample_connected_unit_interval_graph(n, rng), delta, rng);
    });
    for_each_rep(draws, derive_seed(seed, 2), threads, [&](std::size_t r, Rng& rng) {
        b[r] = two_point_excursion_distance(sample_excursion(m_grid, rng), delta, rng);
    });
    Report rep;
    rep.name = "two_point_law";
    rep.params = {{"n", n}, {"m_grid", m_grid}, {"draws", draws}, {"delta", delta}};
    rep.seed = seed;
    auto ma = mean_stderr(a), mb = mean_stderr(b);
    const double ks = ks_statistic(a, b);
    rep.add("graph_mean", ma.mean, ma.stderr_);
    rep.add("excursion_mean", mb.mean, mb.stderr_);
    rep.add("ks", ks);
    rep.threshold = {{"ks_max", ks_tolerance}};
    rep.pass = ks < ks_tolerance;
    return rep;
}

// Median of the coupled box discrepancy over seeds, for each n.
inline Report gp_box_sweep(const std::vector<int>& ns, std::size_t seeds, double delta, int m_grid, std::uint64_t seed,
                           int reference_n = 10000, double median_max = 0.1, unsigned threads = 0) {
    Report rep;
    rep.name = "gp_box";
    rep.params = {{"ns", ns}, {"seeds", seeds}, {"delta", delta}, {"m_grid", m_grid}, {"reference_n", reference_n}};
    rep.seed = seed;
    rep.threshold = {{"median_max_at_reference_n", median_max}, {"nonincreasing_in_n", true}};
    auto median_at = [&](int n, std::uint64_t s) {
        std::vector<double> d(seeds);
        for_each_rep(seeds, s, threads, [&](std::size_t r, Rng& rng) {
            d[r] = gp_box_estimate_unit(sample_irreducible_dyck(n, rng), true, delta, m_grid, rng).discrepancy;
        });
        return median(d);
    };
    bool pass = true;
    double prev = INFINITY;
    for (std::size_t t = 0; t < ns.size(); ++t) {
        double med = median_at(ns[t], derive_seed(seed, 10 + t));
        rep.add("median_n" + std::to_string(ns[t]), med);
        pass &= med <= prev;
        prev = med;
    }
    double ref = median_at(reference_n, derive_seed(seed, 1));
    rep.add("median_n" + std::to_string(reference_n), ref);
    rep.add("mass_defect", std::min(1.0, 2 * delta));
    pass &= ref < median_max;
    rep.pass = pass;
    return rep;
}

// Formula distance against BFS on random irreducible paths, all pairs.
inline Report verify_distance_formula(int n_max, std::size_t paths, std::uint64_t seed, unsigned threads = 0) {
    if (n_max < 2) throw std::invalid_argument("verify_distance_formula: n_max must be >= 2");
    std::vector<std::size_t> bad(paths, 0), pairs(paths, 0);
    for_each_rep(paths, seed, threads, [&](std::size_t r, Rng& rng) {
        int n = 2 + static_cast<int>(rng.below(n_max - 1));
        DyckPath w = sample_irreducible_dyck(n, rng);
        UGraph g = unit_interval_graph(w);
        for (int i = 1; i <= n; ++i) {
            auto d = bfs_from(g, i - 1);
            for (int j = i + 1; j <= n; ++j) {
                ++pairs[r];
                if (!d[j - 1] || *d[j - 1] != unit_distance_formula(w, i, j)) ++bad[r];
            }
        }
    });
    std::size_t nb = 0, np = 0;
    for (std::size_t r = 0; r < paths; ++r) nb += bad[r], np += pairs[r];
    Report rep;
    rep.name = "distance_formula";
    rep.params = {{"n_max", n_max}, {"paths", paths}};
    rep.seed = seed;
    rep.add("pairs", static_cast<double>(np));
    rep.add("mismatches", static_cast<double>(nb));
    rep.threshold = {{"mismatches", 0}};
    rep.pass = nb == 0;
    return rep;
}

// Closed-form clique counts against subset enumeration.
inline Report verify_clique_formula(int n_max, int k_max, std::size_t paths, std::uint64_t seed, unsigned threads = 0) {
    if (n_max < 1 || k_max < 1) throw std::invalid_argument("verify_clique_formula: bad bounds");
    std::vector<std::size_t> bad(paths, 0);
    for_each_rep(paths, seed, threads, [&](std::size_t r, Rng& rng) {
        int n = 1 + static_cast<int>(rng.below(n_max));
        DyckPath w = sample_irreducible_dyck(n, rng);
        UGraph g = unit_interval_graph(w);
        for (int k = 1; k <= k_max; ++k)
            if (count_cliques_unit(w, k) != count_cliques(g, k)) ++bad[r];
    });
    std::size_t nb = 0;
    for (auto b : bad) nb += b;
    Report rep;
    rep.name = "clique_formula";
    rep.params = {{"n_max", n_max}, {"k_max", k_max}, {"paths", paths}};
    rep.seed = seed;
    rep.add("mismatches", static_cast<double>(nb));
    rep.threshold = {{"mismatches", 0}};
    rep.pass = nb == 0;
    return rep;
}

// Empirical isomorphism-class law of Sample_k(W) against the exact seed law.
inline Report sample_law_test(Family family, int k, std::size_t draws, std::uint64_t seed, double p_min = 1e-3,
                              unsigned threads = 0) {
    auto law = seed_class_law(family, k);
    std::vector<CanonicalForm> cls(draws);
    LimitGraphon W{family};
    for_each_rep(draws, seed, threads, [&](std::size_t r, Rng& rng) { cls[r] = canonical_form(sample_graph(W, k, rng)); });
    std::map<CanonicalForm, std::uint64_t> cnt;
    for (auto& c : cls) ++cnt[c];
    std::vector<std::uint64_t> obs;
    std::vector<double> probs;
    for (auto& [c, p] : law) {
        obs.push_back(cnt.count(c) ? cnt[c] : 0);
        probs.push_back(p.convert_to<double>());
    }
    std::uint64_t outside = 0;
    for (auto& [c, v] : cnt)
        if (!law.count(c)) outside += v;
    if (outside) {
        obs.push_back(outside);
        probs.push_back(0.0);
    }
    auto chi = chi_square_gof(obs, probs);
    Report rep;
    rep.name = "sample_law";
    rep.params = {{"family", family_name(family)}, {"k", k}, {"draws", draws}};
    rep.seed = seed;
    rep.add("chi_square", chi.statistic);
    rep.add("dof", chi.dof);
    rep.add("p_value", chi.p_value);
    rep.threshold = {{"p_min", p_min}};
    rep.pass = chi.p_value > p_min;
    return rep;
}

// Average of degree-sorted adjacency matrices of G_sigma or G_m.
inline AveragedStepGraphon heatmap_experiment(Family family, int n, std::size_t reps, std::uint64_t seed) {
    AveragedStepGraphon avg;
    for_each_rep(reps, seed, 1, [&](std::size_t, Rng& rng) {
        UGraph g = family == Family::perm ? inversion_graph(sample_permutation(n, rng)) : circle_graph(sample_matching(n, rng));
        avg.add(step_graphon(g, degree_descending_order(g)));
    });
    return avg;
}

}  // namespace interlim
