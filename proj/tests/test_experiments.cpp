#include <gtest/gtest.h>

#include <interlim/experiments/exact_suite.hpp>
#include <interlim/experiments/monte_carlo.hpp>
#include <interlim/experiments/unit_interval.hpp>

#include <cmath>
#include <map>

using namespace interlim;

namespace {

double value(const Report& r, const std::string& label) {
    auto* e = r.find(label);
    if (!e) throw std::runtime_error("missing estimate " + label);
    return e->value;
}

// BigCount multichoose(c, k) = binom(c + k - 1, k)
BigCount multichoose(const BigCount& c, int k) {
    BigCount num = 1, den = 1;
    for (int t = 0; t < k; ++t) {
        num *= c + t;
        den *= t + 1;
    }
    return num / den;
}

}  // namespace

TEST(UnitInterval, Counts) {
    EXPECT_EQ(count_unit_interval_graphs(1), 1);
    EXPECT_EQ(count_unit_interval_graphs(2), 2);
    EXPECT_EQ(count_unit_interval_graphs(3), 4);
    EXPECT_EQ(count_connected_unit_interval_graphs(3), 2);
    EXPECT_EQ(count_connected_unit_interval_graphs(4), 4);
    auto U = unit_interval_counts_upto(40);
    for (int n = 1; n <= 40; ++n) EXPECT_GE(U[n], count_connected_unit_interval_graphs(n));
}

TEST(UnitInterval, ConnectedSamplerUniform) {
    for (int n : {3, 4}) {
        std::map<std::string, std::uint64_t> cnt;
        Rng rng(40 + n);
        const std::size_t draws = 100000;
        for (std::size_t t = 0; t < draws; ++t) {
            auto w = sample_connected_unit_interval_graph(n, rng);
            ASSERT_TRUE(w.irreducible());
            ++cnt[canonical_form(unit_interval_graph(w)).to_string()];
        }
        ASSERT_EQ(BigCount(cnt.size()), count_connected_unit_interval_graphs(n));
        std::vector<std::uint64_t> obs;
        for (auto& [k, v] : cnt) obs.push_back(v);
        EXPECT_GT(chi_square_gof(obs, std::vector<double>(obs.size(), 1.0 / obs.size())).p_value, 1e-3) << n;
    }
}

TEST(UnitInterval, GeneralSamplerUniformAtFour) {
    UnitIntervalSampler s(4);
    Rng rng(44);
    std::map<std::string, std::uint64_t> cnt;
    for (int t = 0; t < 100000; ++t) ++cnt[canonical_form(unit_interval_graph(s.sample(rng).word)).to_string()];
    ASSERT_EQ(BigCount(cnt.size()), count_unit_interval_graphs(4));
    std::vector<std::uint64_t> obs;
    for (auto& [k, v] : cnt) obs.push_back(v);
    EXPECT_GT(chi_square_gof(obs, std::vector<double>(obs.size(), 1.0 / obs.size())).p_value, 1e-3);
}

TEST(UnitInterval, ComponentSizeLawAtTen) {
    const int n = 10;
    const BigCount U = count_unit_interval_graphs(n);
    // exact law of the component-size multiset: prod_d multichoose(C_d, mult_d) / U_n
    std::map<std::vector<int>, double> exact;
    std::function<void(int, int, std::vector<int>&, BigCount)> rec = [&](int left, int maxd, std::vector<int>& parts,
                                                                         BigCount ways) {
        if (left == 0) {
            exact[parts] = BigRational(ways, U).convert_to<double>();
            return;
        }
        for (int d = std::min(left, maxd); d >= 1; --d)
            for (int k = 1; k * d <= left; ++k) {
                for (int t = 0; t < k; ++t) parts.push_back(d);
                rec(left - k * d, d - 1, parts, ways * multichoose(count_connected_unit_interval_graphs(d), k));
                parts.resize(parts.size() - k);
            }
    };
    std::vector<int> parts;
    rec(n, n, parts, 1);
    double total = 0;
    for (auto& [p, q] : exact) total += q;
    EXPECT_NEAR(total, 1.0, 1e-12);

    UnitIntervalSampler s(n);
    Rng rng(10);
    std::map<std::vector<int>, std::uint64_t> cnt;
    for (int t = 0; t < 100000; ++t) {
        auto sizes = s.sample(rng).component_sizes;
        std::sort(sizes.rbegin(), sizes.rend());
        ++cnt[sizes];
    }
    // pool classes with tiny expectation into one cell
    std::vector<std::uint64_t> obs;
    std::vector<double> probs;
    std::uint64_t rest_o = 0;
    double rest_p = 0;
    for (auto& [p, q] : exact) {
        if (q * 100000 >= 5) {
            obs.push_back(cnt[p]);
            probs.push_back(q);
        } else {
            rest_o += cnt[p];
            rest_p += q;
        }
    }
    obs.push_back(rest_o);
    probs.push_back(rest_p);
    EXPECT_GT(chi_square_gof(obs, probs).p_value, 1e-3);
}

TEST(UnitInterval, SamplerLargeN) {
    UnitIntervalSampler s(20000);
    Rng rng(3);
    auto x = s.sample(rng);
    EXPECT_EQ(x.word.size(), 20000);
    int sum = 0;
    for (int c : x.component_sizes) sum += c;
    EXPECT_EQ(sum, 20000);
    EXPECT_EQ(connected_components(unit_interval_graph(sample_unit_interval_word(30, rng).word)).size() >= 1, true);
}

TEST(Experiments, CliqueDensity) {
    auto one = mc_clique_density(Family::perm, 50, 1, 3, 1);
    EXPECT_DOUBLE_EQ(value(one, "density"), 1.0);
    auto r = mc_clique_density(Family::circle, 300, 2, 20, 2, 0.02);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_NEAR(value(r, "limit"), 1.0 / 3, 1e-15);
    EXPECT_THROW(mc_clique_density(Family::perm, 50, 6, 3, 1), std::invalid_argument);
    EXPECT_THROW(mc_clique_density(Family::perm, 5000, 2, 3, 1), std::invalid_argument);
}

TEST(Experiments, PoissonAtFourMatchesEnumeration) {
    std::size_t zero = 0, total = 0;
    double mx = 0;
    for_each_matching(4, [&](const Matching& m) {
        Xyz s = xyz_stats(m);
        ++total;
        zero += s.x == 0 && s.y == 0 && s.z == 0;
        mx += s.x;
    });
    EXPECT_EQ(total, 105u);
    auto r = mc_poisson_xyz(4, 30000, 1, 7);
    auto* p = r.find("p_000");
    EXPECT_NEAR(p->value, double(zero) / total, 3 * p->stderr_ + 1e-12);
    auto* m = r.find("mean_x");
    EXPECT_NEAR(m->value, mx / total, 3 * m->stderr_);
    EXPECT_THROW(mc_poisson_xyz(3, 10, 1, 1), std::invalid_argument);
}

TEST(Experiments, IndecomposableRate) {
    auto three = mc_indecomposable_rate(3, 100, 1);
    EXPECT_DOUBLE_EQ(value(three, "rate"), 1.0);
    std::size_t ind = 0;
    for_each_matching(4, [&](const Matching& m) { ind += is_indecomposable(m); });
    auto r = mc_indecomposable_rate(4, 30000, 2);
    auto* e = r.find("rate");
    EXPECT_NEAR(e->value, ind / 105.0, 3 * e->stderr_);
}

TEST(Experiments, LargestComponent) {
    auto one = largest_component_stats(1, 50, 1);
    EXPECT_DOUBLE_EQ(value(one, "mean_deficiency"), 0.0);
    EXPECT_TRUE(one.pass);
    auto a = largest_component_stats(300, 400, 2);
    EXPECT_TRUE(a.details.contains("histogram"));
    EXPECT_DOUBLE_EQ(histogram_tv(a.details["histogram"], a.details["histogram"]), 0.0);
    EXPECT_EQ(a.threshold["empirical"], true);
    auto* exact = a.find("p_deficiency_le_cut_exact");
    auto* emp = a.find("p_deficiency_le_cut");
    ASSERT_NE(exact, nullptr);
    EXPECT_NEAR(emp->value, exact->value, 3 * emp->stderr_ + 1e-9);
}

TEST(UnitInterval, LargestComponentProbabilityExact) {
    // n = 6: largest component >= 4 counted from the exact class list
    const int n = 6;
    std::size_t hit = 0, total = 0;
    std::set<CanonicalForm> seen;
    for_each_dyck(n, [&](const DyckPath& w) {
        auto g = unit_interval_graph(w);
        if (!seen.insert(canonical_form(g)).second) return;
        ++total;
        hit += largest_component_size(g) >= 4;
    });
    ASSERT_EQ(BigCount(total), count_unit_interval_graphs(n));
    EXPECT_NEAR(UnitIntervalSampler(n).prob_largest_at_least(4), double(hit) / total, 1e-12);
    EXPECT_THROW(UnitIntervalSampler(n).prob_largest_at_least(3), std::invalid_argument);
}

TEST(Experiments, CliqueScalingSmall) {
    auto r = mc_unit_clique_scaling(2000, 3, 400, 256, 5);
    EXPECT_GT(value(r, "corr_k2_k3"), 0.0);
    EXPECT_NEAR(value(r, "k2_graph_mean"), value(r, "k2_excursion_mean"), 0.1);
    EXPECT_THROW(mc_unit_clique_scaling(100, 7, 10, 64, 1), std::invalid_argument);
}

TEST(Experiments, TwoPointLawSmall) {
    auto r = mc_two_point_law(2000, 512, 2000, 0.01, 6, 0.08);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
}

TEST(Experiments, GpSweepSmall) {
    auto r = gp_box_sweep({500, 2000}, 7, 0.05, 100, 8, 4000, 0.3);
    EXPECT_NE(r.find("median_n500"), nullptr);
    EXPECT_LT(value(r, "median_n4000"), 0.3);
    EXPECT_DOUBLE_EQ(value(r, "mass_defect"), 0.1);
}

TEST(Experiments, FormulaVerifiers) {
    EXPECT_TRUE(verify_distance_formula(60, 30, 1).pass);
    EXPECT_TRUE(verify_clique_formula(14, 5, 30, 2).pass);
}

TEST(Experiments, SampleLaw) {
    EXPECT_TRUE(sample_law_test(Family::circle, 3, 20000, 3).pass);
    EXPECT_TRUE(sample_law_test(Family::perm, 3, 20000, 4).pass);
}

TEST(Experiments, Heatmap) {
    auto h = heatmap_experiment(Family::perm, 60, 5, 9);
    EXPECT_EQ(h.n, 60);
    EXPECT_EQ(h.count, 5);
    for (double v : h.cells) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Experiments, Reproducible) {
    auto a = mc_clique_density(Family::perm, 200, 3, 10, 99, 0.05, 1).to_json();
    auto b = mc_clique_density(Family::perm, 200, 3, 10, 99, 0.05, 3).to_json();
    EXPECT_EQ(a.dump(), b.dump());
    auto c = mc_clique_density(Family::perm, 200, 3, 10, 100, 0.05, 1).to_json();
    EXPECT_NE(a.dump(), c.dump());
    auto j = a;
    for (auto key : {"name", "params", "seed", "estimates", "pass", "threshold"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(ExactSuite, PassesUpToFive) {
    auto r = exact_enumeration_suite(5);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_EQ(r.details.size(), 11u);
    EXPECT_THROW(exact_enumeration_suite(7), std::invalid_argument);
}

TEST(ExactSuite, ClaimsReportCounterexamples) {
    ClaimResult c;
    c.fail("first");
    c.fail("second");
    EXPECT_FALSE(c.ok);
    EXPECT_EQ(c.counterexample, "first");
    auto s4 = claim_simple_size4();
    EXPECT_TRUE(s4.ok);
    EXPECT_EQ(s4.checked, 24u);
}
