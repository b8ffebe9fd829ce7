#pragma once

#include "../combinat/counting.hpp"
#include "../combinat/decomposition.hpp"
#include "../combinat/dyck.hpp"
#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "../combinat/phi.hpp"
#include "../combinat/symmetry.hpp"
#include "../graphon/graphon.hpp"
#include "../graphs/builders.hpp"
#include "../graphs/canonical.hpp"
#include "../graphs/distance.hpp"
#include "../graphs/modules.hpp"
#include "../graphs/realizers.hpp"
#include "report.hpp"
#include "unit_interval.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace interlim {

namespace detail {

struct ClaimLog {
    Report& rep;

    void record(const std::string& claim, bool ok, std::size_t checked, const std::string& counterexample) {
        nlohmann::json j = {{"pass", ok}, {"checked", checked}};
        if (!ok) j["counterexample"] = counterexample;
        rep.details[claim] = j;
        rep.add(claim, ok ? 1.0 : 0.0);
        rep.pass = rep.pass && ok;
    }
};

}  // namespace detail

// Exhaustive claims, grouped by topic. Each returns (ok, checked, counterexample).
struct ClaimResult {
    bool ok = true;
    std::size_t checked = 0;
    std::string counterexample;

    void fail(const std::string& why) {
        if (ok) counterexample = why;
        ok = false;
    }
};

inline ClaimResult claim_modular_prime_iff_simple(int n_max) {
    ClaimResult r;
    for (int n = 1; n <= n_max; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            ++r.checked;
            if (is_modular_prime(inversion_graph(p)) != is_simple(p)) r.fail(p.to_string());
        });
    return r;
}

inline ClaimResult claim_split_prime_iff_indecomposable(int n_max) {
    ClaimResult r;
    for (int n = 1; n <= n_max; ++n)
        for_each_matching(n, [&](const Matching& m) {
            ++r.checked;
            bool ind = is_indecomposable(m);
            if (ind != is_indecomposable_bruteforce(m)) r.fail("fast/brute disagree: " + m.to_string());
            if (is_split_prime(circle_graph(m)) != ind) r.fail(m.to_string());
        });
    return r;
}

// Modular-prime permutation graphs: 1..4 realizers, all simple.
inline ClaimResult claim_perm_realizers(int n) {
    ClaimResult r;
    for (auto& [cf, reps] : permutation_graph_classes(n)) {
        UGraph g = inversion_graph(reps.front());
        if (!is_modular_prime(g)) continue;
        ++r.checked;
        if (reps.size() < 1 || reps.size() > 4) r.fail(cf.to_string() + " has " + std::to_string(reps.size()) + " realizers");
        for (auto& p : reps)
            if (!is_simple(p)) r.fail("non-simple realizer " + p.to_string());
    }
    return r;
}

// Split-prime circle graphs: 1..4n realizers, closed under shift and reversal.
inline ClaimResult claim_matching_realizers(int n) {
    ClaimResult r;
    for (auto& [cf, reps] : circle_graph_classes(n)) {
        UGraph g = circle_graph(reps.front());
        if (!is_split_prime(g)) continue;
        ++r.checked;
        if (reps.size() < 1 || reps.size() > static_cast<std::size_t>(4 * n))
            r.fail(cf.to_string() + " has " + std::to_string(reps.size()) + " realizers");
        std::set<Matching> s(reps.begin(), reps.end());
        for (auto& m : reps)
            if (!s.count(shift(m)) || !s.count(reversal(m))) r.fail("not closed at " + m.to_string());
    }
    return r;
}

inline ClaimResult claim_decomposed_counts(int n_max) {
    ClaimResult r;
    for (int n = 4; n <= n_max; ++n) {
        std::vector<BigCount> cnt(n + 1, 0);
        for_each_matching(n, [&](const Matching& m) {
            for (auto& d : all_decompositions(m)) ++cnt[d.k];
        });
        for (int k = 2; k <= n - 2; ++k) {
            ++r.checked;
            if (cnt[k] != count_decomposed(n, k))
                r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": enumerated " + cnt[k].str() +
                       " vs formula " + count_decomposed(n, k).str());
        }
    }
    return r;
}

inline ClaimResult claim_xyz_iff(int n_max) {
    ClaimResult r;
    for (int n = 4; n <= n_max; ++n)
        for_each_matching(n, [&](const Matching& m) {
            ++r.checked;
            Xyz s = xyz_stats(m);
            bool zero = s.x == 0 && s.y == 0 && s.z == 0;
            bool neither = !k_decomposition(m, 2) && !k_decomposition(m, n - 2);
            if (zero != neither) r.fail(m.to_string());
        });
    return r;
}

// phi is a bijection D_n^k -> M^*_{n-k+1} x M_{k+1} and phi_inverse undoes it.
inline ClaimResult claim_phi_bijection(int n_max) {
    ClaimResult r;
    for (int n = 4; n <= n_max; ++n) {
        std::map<int, std::set<PhiImage>> images;
        for_each_matching(n, [&](const Matching& m) {
            for (auto& d : all_decompositions(m)) {
                ++r.checked;
                PhiImage img = phi(m, d);
                if (!images[d.k].insert(img).second) r.fail("repeated image from " + m.to_string());
                auto back = phi_inverse(img);
                if (!(back.matching == m && back.decomposition == d)) r.fail("round trip fails at " + m.to_string());
            }
        });
        for (int k = 2; k <= n - 2; ++k) {
            // |M^*_{a}| counts marks away from the chord through 1: (a-1) m_a
            BigCount expect = BigCount(n - k) * count_matchings(n - k + 1) * count_matchings(k + 1);
            if (BigCount(images[k].size()) != expect)
                r.fail("image size for n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return r;
}

inline ClaimResult claim_sample3_laws() {
    ClaimResult r;
    for (Family f : {Family::perm, Family::circle}) {
        ++r.checked;
        if (latent_class_law(f, 3) != seed_class_law(f, 3)) r.fail(family_name(f));
    }
    return r;
}

// Each connected unit interval graph has one or two irreducible paths, mirrors of each other.
inline ClaimResult claim_unit_interval_uniqueness(int n_max) {
    ClaimResult r;
    for (int n = 1; n <= n_max; ++n) {
        std::map<CanonicalForm, std::vector<DyckPath>> cls;
        for_each_dyck(n, [&](const DyckPath& w) {
            UGraph g = unit_interval_graph(w);
            bool connected = connected_components(g).size() == 1;
            if (connected != w.irreducible()) r.fail("connectivity mismatch at " + w.to_string());
            if (connected) cls[canonical_form(g)].push_back(w);
        });
        for (auto& [cf, ws] : cls) {
            ++r.checked;
            if (ws.size() == 1 && !is_palindromic(ws[0])) r.fail("single non-palindromic " + ws[0].to_string());
            if (ws.size() == 2 && !(mirror(ws[0]) == ws[1])) r.fail("non-mirror pair " + ws[0].to_string());
            if (ws.size() > 2) r.fail(std::to_string(ws.size()) + " paths for one graph, e.g. " + ws[0].to_string());
        }
        if (BigCount(cls.size()) != count_connected_unit_interval_graphs(n))
            r.fail("connected class count at n=" + std::to_string(n));
    }
    return r;
}

inline ClaimResult claim_counting(int n_max) {
    ClaimResult r;
    auto U = unit_interval_counts_upto(n_max);
    for (int n = 1; n <= n_max; ++n) {
        auto chk = [&](const std::string& what, const BigCount& a, const BigCount& b) {
            ++r.checked;
            if (a != b) r.fail(what + " at n=" + std::to_string(n) + ": " + a.str() + " vs " + b.str());
        };
        BigCount matchings = 0;
        std::vector<Matching> all;
        for_each_matching(n, [&](const Matching& m) { ++matchings, all.push_back(m); });
        chk("m_n", count_matchings(n), matchings);
        for (int d = 2; d <= 2 * n; ++d) {
            if ((2 * n) % d) continue;
            BigCount fixed = 0;
            for (auto& m : all) fixed += fixed_by_rotation(m, 2 * n / d);
            chk("symmetric matchings d=" + std::to_string(d), count_symmetric_matchings(n, d), fixed);
        }
        BigCount dyck = 0, irr = 0, pal = 0;
        std::set<CanonicalForm> uig;
        for_each_dyck(n, [&](const DyckPath& w) {
            ++dyck;
            if (w.irreducible()) {
                ++irr;
                if (is_palindromic(w)) ++pal;
            }
            uig.insert(canonical_form(unit_interval_graph(w)));
        });
        chk("Catalan", count_dyck(n), dyck);
        chk("irreducible", count_irreducible_dyck(n), irr);
        chk("palindromic irreducible", count_palindromic_irreducible(n), pal);
        chk("U_n", U[n], BigCount(uig.size()));
    }
    return r;
}

inline ClaimResult claim_simple_size4() {
    ClaimResult r;
    std::set<std::string> found;
    for_each_permutation(4, [&](const Permutation& p) {
        ++r.checked;
        if (is_simple(p)) found.insert(p.to_string());
    });
    if (found != std::set<std::string>{"2 4 1 3", "3 1 4 2"}) r.fail("simple permutations of size 4 differ from {2413, 3142}");
    return r;
}

// Aggregated exhaustive verification, n_max <= 6.
inline Report exact_enumeration_suite(int n_max) {
    if (n_max < 1 || n_max > 6) throw std::invalid_argument("exact_enumeration_suite: n_max must lie in 1..6");
    Report rep;
    rep.name = "exact";
    rep.params = {{"n_max", n_max}};
    rep.threshold = {{"exact", true}};
    detail::ClaimLog log{rep};
    auto put = [&](const std::string& name, const ClaimResult& c) { log.record(name, c.ok, c.checked, c.counterexample); };
    put("modular_prime_iff_simple", claim_modular_prime_iff_simple(n_max));
    put("split_prime_iff_indecomposable", claim_split_prime_iff_indecomposable(n_max));
    put("perm_realizer_bound", claim_perm_realizers(n_max));
    put("matching_realizer_bound", claim_matching_realizers(std::min(n_max, 5)));
    put("decomposed_count", claim_decomposed_counts(n_max));
    put("xyz_iff_not_2_or_n2_decomposable", claim_xyz_iff(n_max));
    put("phi_bijection", claim_phi_bijection(std::min(n_max, 5)));
    put("sample3_laws", claim_sample3_laws());
    put("unit_interval_uniqueness", claim_unit_interval_uniqueness(n_max));
    put("counting", claim_counting(n_max));
    put("simple_permutations_size4", claim_simple_size4());
    return rep;
}

}  // namespace interlim
