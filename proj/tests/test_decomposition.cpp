#include <gtest/gtest.h>

#include <interlim/combinat/counting.hpp>
#include <interlim/combinat/decomposition.hpp>
#include <interlim/combinat/phi.hpp>
#include <interlim/graphs/builders.hpp>
#include <interlim/graphs/modules.hpp>

#include <map>
#include <set>

using namespace interlim;

namespace {

// chords a(1,3) b(2,11) e(4,10) c(5,14) f(6,8) d(7,13) g(9,12)
Matching fig5() { return parse_matching("1-3 2-11 4-10 5-14 6-8 7-13 9-12"); }

// Independent oracle: every labelling of the 2n points by four consecutive
// arcs (C1 holding point 1), checked by counting parities per chord.
std::map<int, std::size_t> naive_decomposition_counts(const Matching& m) {
    const int N = m.points(), n = m.size();
    std::map<int, std::size_t> out;
    for (int s = 0; s < N; ++s)
        for (int l1 = 1; l1 <= N; ++l1) {
            if (!(s == 0 || s + l1 > N)) continue;
            for (int l2 = 0; l1 + l2 <= N; ++l2)
                for (int l3 = 0; l1 + l2 + l3 <= N; ++l3) {
                    std::vector<int> lab(N);
                    int pos = s;
                    const int len[4] = {l1, l2, l3, N - l1 - l2 - l3};
                    for (int q = 0; q < 4; ++q)
                        for (int t = 0; t < len[q]; ++t) lab[pos++ % N] = q;
                    bool ok = true;
                    int even = 0;
                    for (int i = 0; i < N; ++i) {
                        ok &= (lab[i] % 2) == (lab[m[i]] % 2);
                        even += lab[i] % 2;
                    }
                    int k = even / 2;
                    if (ok && k >= 2 && k <= n - 2) ++out[k];
                }
        }
    return out;
}

}  // namespace

TEST(Decomposition, Fig5Fixture) {
    Matching m = fig5();
    ASSERT_EQ(m.size(), 7);
    auto d = k_decomposition(m, 4);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(decomposition_error(m, *d), "");
    // the partition drawn in the figure
    Decomposition drawn = make_decomposition(14, 0, 4, 5, 2, 3, 4);
    EXPECT_EQ(decomposition_error(m, drawn), "");
    EXPECT_FALSE(is_indecomposable(m));
}

TEST(Decomposition, SmallSizesIndecomposable) {
    for (int n = 1; n <= 3; ++n)
        for_each_matching(n, [&](const Matching& m) { EXPECT_TRUE(is_indecomposable(m)); });
    EXPECT_THROW(k_decomposition(fig5(), 1), std::invalid_argument);
    EXPECT_THROW(k_decomposition(fig5(), 6), std::invalid_argument);
    EXPECT_THROW(k_decomposition(parse_matching("1-2 3-4 5-6"), 2), std::invalid_argument);
}

TEST(Decomposition, WitnessSearchMatchesNaiveEnumerationSize4) {
    std::size_t decomposable = 0, naive = 0;
    for_each_matching(4, [&](const Matching& m) {
        decomposable += k_decomposition(m, 2).has_value();
        naive += naive_decomposition_counts(m).count(2) > 0;
    });
    EXPECT_EQ(decomposable, naive);
}

TEST(Decomposition, EnumerationMatchesNaiveAndFormula) {
    for (int n = 4; n <= 6; ++n) {
        std::map<int, std::size_t> a, b;
        for_each_matching(n, [&](const Matching& m) {
            for (auto& d : all_decompositions(m)) {
                ++a[d.k];
                EXPECT_EQ(decomposition_error(m, d), "");
            }
            if (n <= 5)
                for (auto [k, c] : naive_decomposition_counts(m)) b[k] += c;
        });
        for (int k = 2; k <= n - 2; ++k) {
            EXPECT_EQ(count_decomposed(n, k), a[k]) << "n=" << n << " k=" << k;
            if (n <= 5) { EXPECT_EQ(a[k], b[k]); }
        }
    }
}

TEST(Decomposition, FastTestMatchesBruteForceExhaustive) {
    for (int n = 1; n <= 6; ++n)
        for_each_matching(n, [&](const Matching& m) {
            ASSERT_EQ(is_indecomposable(m), is_indecomposable_bruteforce(m)) << m.to_string();
        });
}

TEST(Decomposition, FastTestMatchesBruteForceRandom) {
    Rng rng(2024);
    for (int n = 7; n <= 10; ++n)
        for (int t = 0; t < 150; ++t) {
            Matching m = sample_matching(n, rng);
            ASSERT_EQ(is_indecomposable(m), is_indecomposable_bruteforce(m)) << m.to_string();
        }
}

TEST(Decomposition, FastTestOnIndecomposableRichSamples) {
    // condition on x = y = z = 0 so the full scan runs
    Rng rng(77);
    int seen = 0;
    while (seen < 60) {
        Matching m = sample_matching(9 + seen % 3, rng);
        Xyz s = xyz_stats(m);
        if (s.x || s.y || s.z) continue;
        ++seen;
        ASSERT_EQ(is_indecomposable(m), is_indecomposable_bruteforce(m)) << m.to_string();
    }
}

TEST(Decomposition, RejectsInvalid) {
    Matching m = fig5();
    Decomposition bad = make_decomposition(14, 0, 4, 5, 2, 3, 3);
    EXPECT_NE(decomposition_error(m, bad), "");
    EXPECT_THROW(phi(m, bad), std::invalid_argument);
    Decomposition shifted = make_decomposition(14, 1, 4, 5, 2, 3, 4);
    EXPECT_NE(decomposition_error(m, shifted), "");
}

TEST(Phi, RoundTripAndBijectionSize4) {
    std::set<PhiImage> images;
    std::size_t objects = 0;
    for_each_matching(4, [&](const Matching& m) {
        for (auto& d : all_decompositions(m)) {
            ++objects;
            PhiImage img = phi(m, d);
            EXPECT_EQ(img.marked.matching.size(), 3);
            EXPECT_EQ(img.small.size(), 3);
            EXPECT_NE(img.marked.mark, 0);
            EXPECT_TRUE(images.insert(img).second);
            auto back = phi_inverse(img);
            EXPECT_EQ(back.matching, m);
            EXPECT_EQ(back.decomposition, d);
        }
    });
    EXPECT_EQ(objects, 450u);
    // image = all (marked size-3 matching with mark off the chord through 1) x (size-3 matching)
    std::set<PhiImage> target;
    for_each_matching(3, [&](const Matching& a) {
        for (auto [l, r] : a.chords()) {
            if (l == 0) continue;
            for_each_matching(3, [&](const Matching& b) { target.insert({{a, l}, b}); });
        }
    });
    EXPECT_EQ(images, target);
    for (auto& img : target) EXPECT_EQ(phi(phi_inverse(img).matching, phi_inverse(img).decomposition), img);
}

TEST(Phi, SizesForN6K3) {
    for_each_matching(6, [&](const Matching& m) {
        static int done = 0;
        if (done > 20) return;
        if (auto d = k_decomposition(m, 3)) {
            ++done;
            auto img = phi(m, *d);
            EXPECT_EQ(img.marked.matching.size(), 4);
            EXPECT_EQ(img.small.size(), 4);
        }
    });
}

TEST(Phi, EmptyC2UsesChordOneTwo) {
    // C2 empty: the small matching has the chord 1-2
    for_each_matching(5, [&](const Matching& m) {
        for (auto& d : all_decompositions(m))
            if (d.part[1].length == 0) { EXPECT_EQ(phi(m, d).small[0], 1); }
    });
}

TEST(Phi, BijectionSize5And6) {
    for (int n = 5; n <= 6; ++n) {
        std::map<int, std::set<PhiImage>> images;
        std::map<int, std::size_t> cnt;
        for_each_matching(n, [&](const Matching& m) {
            for (auto& d : all_decompositions(m)) {
                ++cnt[d.k];
                auto img = phi(m, d);
                images[d.k].insert(img);
                auto back = phi_inverse(img);
                ASSERT_TRUE(back.matching == m && back.decomposition == d);
            }
        });
        for (int k = 2; k <= n - 2; ++k) {
            EXPECT_EQ(images[k].size(), cnt[k]);
            EXPECT_EQ(count_decomposed(n, k), images[k].size());
        }
    }
}

TEST(Phi, InverseRejectsBadMarks) {
    Matching a = parse_matching("1-4 2-5 3-6"), b = parse_matching("1-2 3-4 5-6");
    EXPECT_THROW(phi_inverse({{a, 0}, b}), std::invalid_argument);  // chord through 1
    EXPECT_THROW(phi_inverse({{a, 4}, b}), std::invalid_argument);  // not the smaller endpoint
}

TEST(Decomposition, XyzCharacterizesTwoDecomposability) {
    for (int n = 4; n <= 6; ++n)
        for_each_matching(n, [&](const Matching& m) {
            Xyz s = xyz_stats(m);
            bool zero = !s.x && !s.y && !s.z;
            bool neither = !k_decomposition(m, 2) && !k_decomposition(m, n - 2);
            ASSERT_EQ(zero, neither) << m.to_string();
        });
}

TEST(Decomposition, SplitPrimeIffIndecomposableSize5) {
    for_each_matching(5, [&](const Matching& m) {
        EXPECT_EQ(is_split_prime(circle_graph(m)), is_indecomposable(m)) << m.to_string();
    });
}
