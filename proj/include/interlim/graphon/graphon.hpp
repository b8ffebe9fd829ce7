#pragma once

#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "../core/bigcount.hpp"
#include "../core/random.hpp"
#include "../graphs/builders.hpp"
#include "../graphs/canonical.hpp"
#include "../graphs/ugraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

struct LatentPoint {
    double a = 0.0;
    double b = 0.0;
};

enum class Family { perm, circle };

inline std::string family_name(Family f) { return f == Family::perm ? "perm" : "circle"; }

inline Family parse_family(const std::string& s) {
    if (s == "perm") return Family::perm;
    if (s == "circle") return Family::circle;
    throw std::invalid_argument("unknown family '" + s + "' (expected perm or circle)");
}

struct LimitGraphon {
    Family family = Family::perm;
};

// {0,1}-valued; coincident coordinates give 0
inline int eval(const LimitGraphon& W, const LatentPoint& p, const LatentPoint& q) {
    if (W.family == Family::perm) return (p.a - q.a) * (p.b - q.b) < 0 ? 1 : 0;
    const double v[4] = {p.a, p.b, q.a, q.b};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return 0;
    const double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
    const bool in1 = lo < q.a && q.a < hi, in2 = lo < q.b && q.b < hi;
    return in1 != in2 ? 1 : 0;
}

inline UGraph graph_from_latent(const LimitGraphon& W, const std::vector<LatentPoint>& pts) {
    const int k = static_cast<int>(pts.size());
    UGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (eval(W, pts[i], pts[j])) g.add_edge(i, j);
    return g;
}

// Sample_k(W): k i.i.d. uniform latent points in [0,1]^2.
inline UGraph sample_graph(const LimitGraphon& W, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample_graph: k must be >= 1");
    std::vector<LatentPoint> pts(k);
    for (auto& p : pts) p = {rng.uniform(), rng.uniform()};
    return graph_from_latent(W, pts);
}

// dens(K_k, W): 1/k! for perm, 2^k k! / (2k)! for circle
inline BigRational clique_density(Family f, int k) {
    if (k < 1) throw std::invalid_argument("clique_density: k must be >= 1");
    if (f == Family::perm) return BigRational(1) / BigRational(factorial(k));
    BigCount num = BigCount(1) << k;
    num *= factorial(k);
    return BigRational(num) / BigRational(factorial(2 * k));
}

using ClassLaw = std::map<CanonicalForm, BigRational>;

// Law of the isomorphism class of G_sigma (perm) or G_m (circle), uniform seed of size k.
inline ClassLaw seed_class_law(Family f, int k) {
    std::map<CanonicalForm, BigCount> cnt;
    BigCount total = 0;
    if (f == Family::perm)
        for_each_permutation(k, [&](const Permutation& p) { ++cnt[canonical_form(inversion_graph(p))], ++total; });
    else
        for_each_matching(k, [&](const Matching& m) { ++cnt[canonical_form(circle_graph(m))], ++total; });
    ClassLaw law;
    for (auto& [c, v] : cnt) law[c] = BigRational(v) / BigRational(total);
    return law;
}

// Law of Sample_k(W) computed through eval: only the relative order of the
// latent coordinates matters, and all orders are equally likely.
inline ClassLaw latent_class_law(Family f, int k) {
    std::map<CanonicalForm, BigCount> cnt;
    BigCount total = 0;
    LimitGraphon W{f};
    std::vector<LatentPoint> pts(k);
    if (f == Family::perm) {
        std::vector<int> ra(k), rb(k);
        std::iota(ra.begin(), ra.end(), 0);
        do {
            std::iota(rb.begin(), rb.end(), 0);
            do {
                for (int i = 0; i < k; ++i) pts[i] = {double(ra[i]), double(rb[i])};
                ++cnt[canonical_form(graph_from_latent(W, pts))];
                ++total;
            } while (std::next_permutation(rb.begin(), rb.end()));
        } while (std::next_permutation(ra.begin(), ra.end()));
    } else {
        std::vector<int> r(2 * k);
        std::iota(r.begin(), r.end(), 0);
        do {
            for (int i = 0; i < k; ++i) pts[i] = {double(r[2 * i]), double(r[2 * i + 1])};
            ++cnt[canonical_form(graph_from_latent(W, pts))];
            ++total;
        } while (std::next_permutation(r.begin(), r.end()));
    }
    ClassLaw law;
    for (auto& [c, v] : cnt) law[c] = BigRational(v) / BigRational(total);
    return law;
}

}  // namespace interlim
