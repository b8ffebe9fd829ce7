#include <gtest/gtest.h>

#include <interlim/combinat/counting.hpp>
#include <interlim/graphs/builders.hpp>
#include <interlim/graphs/canonical.hpp>
#include <interlim/graphs/cliques.hpp>
#include <interlim/graphs/distance.hpp>
#include <interlim/graphs/io.hpp>
#include <interlim/graphs/modules.hpp>
#include <interlim/graphs/realizers.hpp>

#include <algorithm>
#include <numeric>

using namespace interlim;

namespace {

UGraph random_graph(int n, double p, Rng& rng) {
    UGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) g.add_edge(i, j);
    return g;
}

UGraph relabel(const UGraph& g, const std::vector<int>& sigma) {
    UGraph h(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.has_edge(i, j)) h.add_edge(sigma[i], sigma[j]);
    return h;
}

}  // namespace

TEST(Builders, InversionGraph) {
    auto g = inversion_graph(parse_permutation("2 4 1 3"));
    EXPECT_EQ(to_edge_list(g), "n=4; 1-3 2-3 2-4");
    EXPECT_EQ(inversion_graph(Permutation::identity(5)).edge_count(), 0u);
    EXPECT_EQ(inversion_graph(Permutation::decreasing(5)).edge_count(), 10u);
}

TEST(Builders, CircleGraph) {
    EXPECT_EQ(to_edge_list(circle_graph(parse_matching("1-3 2-4"))), "n=2; 1-2");
    EXPECT_EQ(circle_graph(parse_matching("1-2 3-4 5-6")).edge_count(), 0u);
    EXPECT_EQ(circle_graph(parse_matching("1-4 2-5 3-6")).edge_count(), 3u);
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        auto m = sample_matching(8, rng);
        auto g = circle_graph(m);
        auto ch = m.chords();
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) EXPECT_EQ(g.has_edge(i, j), chords_cross(m, ch[i].first, ch[j].first));
    }
}

TEST(Builders, UnitIntervalGraphFixture) {
    auto w = parse_dyck("UUUDUDDUUDDD");
    EXPECT_EQ(f_sequence(w), (std::vector<int>{2, 2, 1, 2, 1, 0}));
    auto g = unit_interval_graph(w);
    EXPECT_EQ(to_edge_list(g), "n=6; 1-2 1-3 2-3 2-4 3-4 4-5 4-6 5-6");
    EXPECT_EQ(bfs_distance(g, 0, 4), 3);
    EXPECT_EQ(unit_distance_formula(w, 1, 5), 3);
    EXPECT_EQ(unit_distance_formula(w, 5, 1), 3);
}

TEST(Distance, FormulaMatchesBfsExhaustive) {
    for (int n = 1; n <= 9; ++n)
        for_each_dyck(n, [&](const DyckPath& w) {
            if (!w.irreducible()) {
                if (n >= 2) { EXPECT_THROW(unit_distance_formula(w, 1, n), std::invalid_argument); }
                return;
            }
            auto g = unit_interval_graph(w);
            auto f = f_sequence(w);
            for (int i = 0; i < n; ++i) {
                auto bfs = bfs_from(g, i);
                auto fwd = unit_distances_forward(f, i);
                for (int j = 0; j < n; ++j) {
                    ASSERT_TRUE(bfs[j].has_value());
                    ASSERT_EQ(*bfs[j], unit_distance_formula(w, i + 1, j + 1)) << w.to_string();
                    if (j >= i) { ASSERT_EQ(*bfs[j], fwd[j]); }
                }
            }
        });
}

TEST(Distance, FormulaMatchesBfsRandomLarge) {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto w = sample_irreducible_dyck(300, rng);
        auto g = unit_interval_graph(w);
        for (int s = 0; s < 5; ++s) {
            int i = static_cast<int>(rng.below(300));
            auto bfs = bfs_from(g, i);
            for (int j = 0; j < 300; j += 7) ASSERT_EQ(*bfs[j], unit_distance_formula(w, i + 1, j + 1));
        }
    }
}

TEST(Distance, ComponentsAndErrors) {
    auto g = parse_edge_list("n=6; 1-2 2-3 5-6");
    auto cc = connected_components(g);
    EXPECT_EQ(cc.size(), 3u);
    EXPECT_EQ(largest_component_size(g), 3);
    EXPECT_FALSE(bfs_distance(g, 0, 4).has_value());
    EXPECT_EQ(bfs_distance(g, 0, 2), 2);
    EXPECT_THROW(unit_distance_formula(parse_dyck("UUDD"), 0, 1), std::out_of_range);
    // reducible path: the unit interval graph is disconnected
    auto w = parse_dyck("UDUUDD");
    EXPECT_EQ(connected_components(unit_interval_graph(w)).size(), 2u);
}

TEST(Cliques, FastCountersMatchOracle) {
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        int n = 6 + static_cast<int>(rng.below(10));
        auto p = sample_permutation(n, rng);
        auto m = sample_matching(n, rng);
        auto w = sample_dyck(n, rng);
        for (int k = 1; k <= 5; ++k) {
            EXPECT_EQ(count_cliques_perm(p, k), count_cliques_u64(inversion_graph(p), k));
            EXPECT_EQ(count_cliques_circle(m, k), count_cliques_u64(circle_graph(m), k));
            EXPECT_EQ(count_cliques_unit(w, k), count_cliques(unit_interval_graph(w), k));
            EXPECT_DOUBLE_EQ(count_cliques_unit_double(f_sequence(w), k),
                             static_cast<double>(count_cliques_u64(unit_interval_graph(w), k)));
        }
    }
}

TEST(Cliques, ClosedValues) {
    EXPECT_EQ(count_cliques_u64(UGraph::complete(6), 3), 20u);
    EXPECT_EQ(count_cliques_u64(UGraph::complete(6), 7), 0u);
    EXPECT_EQ(count_cliques_u64(UGraph(4), 1), 4u);
    EXPECT_EQ(count_cliques_perm(Permutation::decreasing(8), 4), 70u);
    EXPECT_THROW(count_cliques_perm(Permutation::identity(3), 0), std::invalid_argument);
    // a unit interval graph is a complete graph when w = U^n D^n
    EXPECT_EQ(count_cliques_unit(parse_dyck("UUUUDDDD"), 3), 4);
}

TEST(Modules, SplitOfFixture) {
    auto m = parse_matching("1-3 2-11 4-10 5-14 6-8 7-13 9-12");
    auto g = circle_graph(m);
    // vertices by left end: a b e c f d g
    EXPECT_TRUE(is_split(g, {0, 1, 2}, {3, 4, 5, 6}));
    EXPECT_FALSE(is_split(g, {0, 1, 3}, {2, 4, 5, 6}));
    EXPECT_FALSE(is_split_prime(g));
    EXPECT_THROW(is_split(g, {0, 1}, {1, 2, 3, 4, 5, 6}), std::invalid_argument);
    EXPECT_THROW(is_split(g, {0, 1}, {2, 3, 4, 5}), std::invalid_argument);
}

TEST(Modules, ModulesAndPrimality) {
    auto p4 = parse_edge_list("n=4; 1-2 2-3 3-4");
    EXPECT_TRUE(is_modular_prime(p4));
    EXPECT_FALSE(is_split_prime(p4));  // {1,2}|{3,4}
    EXPECT_TRUE(is_module(p4, {0}));
    EXPECT_FALSE(is_module(p4, {0, 1}));
    auto k13 = parse_edge_list("n=4; 1-2 1-3 1-4");
    EXPECT_TRUE(is_module(k13, {1, 2, 3}));
    EXPECT_FALSE(is_modular_prime(k13));
    EXPECT_THROW(is_modular_prime(UGraph(kSubsetScanMaxN + 1)), std::invalid_argument);
    // modular primality of G_p coincides with simplicity of p
    for (int n = 3; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            ASSERT_EQ(is_modular_prime(inversion_graph(p)), is_simple(p)) << p.to_string();
        });
}

TEST(Canonical, InvariantUnderRelabeling) {
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(kCanonicalMaxN));
        auto g = random_graph(n, 0.5, rng);
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng.engine());
        ASSERT_EQ(canonical_form(g), canonical_form(relabel(g, sigma)));
    }
    EXPECT_FALSE(isomorphic(parse_edge_list("n=4; 1-2 2-3 3-4"), parse_edge_list("n=4; 1-2 1-3 1-4")));
    EXPECT_THROW(canonical_form(UGraph(kCanonicalMaxN + 1)), std::invalid_argument);
}

TEST(Canonical, CountsUnlabeledGraphs) {
    // 1, 2, 4, 11, 34 unlabeled graphs on 1..5 vertices
    const std::size_t expect[] = {0, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        std::set<CanonicalForm> forms;
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            UGraph g(n);
            int b = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++b)
                    if (mask >> b & 1) g.add_edge(i, j);
            forms.insert(canonical_form(g));
        }
        EXPECT_EQ(forms.size(), expect[n]) << n;
    }
}

TEST(Realizers, Examples) {
    auto r = enumerate_realizers_perm(UGraph::complete(3));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].to_string(), "3 2 1");
    auto e = enumerate_realizers_perm(UGraph(3));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], Permutation::identity(3));
    auto c = enumerate_realizers_matching(UGraph::complete(2));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].to_string(), "1-3 2-4");
    EXPECT_THROW(enumerate_realizers_perm(UGraph(kPermRealizerMaxN + 1)), std::invalid_argument);
    EXPECT_THROW(enumerate_realizers_matching(UGraph(kMatchingRealizerMaxN + 1)), std::invalid_argument);
}

TEST(Realizers, ClassTablesPartitionTheObjects) {
    for (int n = 1; n <= 5; ++n) {
        std::size_t perms = 0, matchings = 0;
        for (auto& [form, list] : permutation_graph_classes(n)) perms += list.size();
        for (auto& [form, list] : circle_graph_classes(n)) matchings += list.size();
        EXPECT_EQ(BigCount(perms), factorial(n));
        EXPECT_EQ(BigCount(matchings), count_matchings(n));
    }
    // every graph on at most 4 vertices is a permutation graph, every graph on
    // at most 5 vertices is a circle graph
    EXPECT_EQ(permutation_graph_classes(4).size(), 11u);
    EXPECT_EQ(circle_graph_classes(5).size(), 34u);
    auto classes = permutation_graph_classes(4);
    for (auto& [form, list] : classes) {
        auto g = inversion_graph(list.front());
        EXPECT_EQ(enumerate_realizers_perm(g).size(), list.size());
    }
}

TEST(Io, RoundTrips) {
    Rng rng(1);
    for (int t = 0; t < 30; ++t) {
        auto g = random_graph(1 + static_cast<int>(rng.below(20)), 0.3, rng);
        auto a = parse_edge_list(to_edge_list(g));
        auto b = parse_adjacency_csv(to_adjacency_csv(g));
        EXPECT_EQ(to_edge_list(a), to_edge_list(g));
        EXPECT_EQ(to_edge_list(b), to_edge_list(g));
    }
    EXPECT_EQ(parse_edge_list("n=3").edge_count(), 0u);
}

TEST(Io, Errors) {
    auto expect_msg = [](auto fn, const std::string& needle) {
        try {
            fn();
            FAIL() << "no throw";
        } catch (const std::invalid_argument& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_msg([] { parse_edge_list("n=3; 1-2 2-4"); }, "out of range");
    expect_msg([] { parse_edge_list("n=3; 1-1"); }, "self-loop");
    expect_msg([] { parse_edge_list("3; 1-2"); }, "n=");
    expect_msg([] { parse_adjacency_csv("0,1\n0,0\n"); }, "asymmetric");
    expect_msg([] { parse_adjacency_csv("1,0\n0,0\n"); }, "diagonal");
    expect_msg([] { parse_adjacency_csv("0,1,x\n"); }, "column 5");
}
