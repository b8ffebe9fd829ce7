#pragma once

#include "../combinat/dyck.hpp"
#include "../combinat/matching.hpp"
#include "../combinat/permutation.hpp"
#include "../core/bigcount.hpp"
#include "ugraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace interlim {

// Number of k-subsets inducing K_k, by recursive extension of a clique
// through the common neighbourhood of its later vertices.
inline std::uint64_t count_cliques_u64(const UGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("count_cliques: k must be >= 1");
    const int n = g.size(), W = g.words();
    if (k == 1) return n;
    std::uint64_t total = 0;
    std::vector<std::vector<std::uint64_t>> cand(k, std::vector<std::uint64_t>(W));
    auto rec = [&](auto&& self, int depth, const std::vector<std::uint64_t>& c) -> void {
        if (depth == k - 1) {
            for (int w = 0; w < W; ++w) total += std::popcount(c[w]);
            return;
        }
        for (int w = 0; w < W; ++w) {
            std::uint64_t x = c[w];
            while (x) {
                int v = w * 64 + std::countr_zero(x);
                x &= x - 1;
                auto& nx = cand[depth + 1];
                const std::uint64_t* r = g.row(v);
                bool any = false;
                for (int t = 0; t < W; ++t) {
                    // keep only neighbours after v
                    std::uint64_t later = t < (v >> 6) ? 0 : (t > (v >> 6) ? ~0ULL : ((v & 63) == 63 ? 0 : ~0ULL << ((v & 63) + 1)));
                    nx[t] = c[t] & r[t] & later;
                    any |= nx[t] != 0;
                }
                if (any) self(self, depth + 1, nx);
            }
        }
    };
    std::vector<std::uint64_t> all(W, 0);
    for (int v = 0; v < n; ++v) all[v >> 6] |= 1ULL << (v & 63);
    rec(rec, 0, all);
    return total;
}

inline BigCount count_cliques(const UGraph& g, int k) { return BigCount(count_cliques_u64(g, k)); }

// sum_i binom(f_w(i), k-1)
inline BigCount count_cliques_unit(const DyckPath& w, int k) {
    if (k < 1) throw std::invalid_argument("count_cliques_unit: k must be >= 1");
    BigCount s = 0;
    for (int fi : f_sequence(w)) s += binomial(fi, k - 1);
    return s;
}

// Same closed form in floating point, for large-n Monte Carlo.
inline double count_cliques_unit_double(const std::vector<int>& f, int k) {
    double s = 0.0;
    for (int fi : f) {
        double b = 1.0;
        for (int t = 0; t < k - 1; ++t) b = b * (fi - t) / (t + 1);
        if (fi >= k - 1) s += b;
    }
    return s;
}

namespace detail {

class Fenwick {
public:
    explicit Fenwick(int n) : t_(n + 1, 0) {}
    void add(int i, std::uint64_t v) {
        for (++i; i < static_cast<int>(t_.size()); i += i & -i) t_[i] += v;
    }
    std::uint64_t prefix(int i) const {  // sum over [0, i)
        std::uint64_t s = 0;
        for (; i > 0; i -= i & -i) s += t_[i];
        return s;
    }
    void clear() { std::fill(t_.begin(), t_.end(), 0); }

private:
    std::vector<std::uint64_t> t_;
};

// Number of strictly increasing subsequences of length len in vals
// (values are distinct ranks in [0, range)).
inline std::uint64_t count_increasing(const std::vector<int>& vals, int range, int len) {
    if (len <= 0) return 1;
    const int m = static_cast<int>(vals.size());
    std::vector<std::uint64_t> cur(m, 1), nxt(m);
    Fenwick fw(range);
    for (int l = 2; l <= len; ++l) {
        fw.clear();
        for (int i = 0; i < m; ++i) {
            nxt[i] = fw.prefix(vals[i]);
            fw.add(vals[i], cur[i]);
        }
        std::swap(cur, nxt);
    }
    std::uint64_t s = 0;
    for (auto c : cur) s += c;
    return s;
}

}  // namespace detail

// k-cliques of the inversion graph = decreasing subsequences of length k.
inline std::uint64_t count_cliques_perm(const Permutation& p, int k) {
    if (k < 1) throw std::invalid_argument("count_cliques_perm: k must be >= 1");
    const int n = p.size();
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - p[i];
    return detail::count_increasing(rev, n, k);
}

// k pairwise crossing chords satisfy l_1 < ... < l_k < r_1 < ... < r_k.
// Fix the chord with the largest left end; the others form an increasing
// chain among chords with l < l_c < r < r_c.
inline std::uint64_t count_cliques_circle(const Matching& m, int k) {
    if (k < 1) throw std::invalid_argument("count_cliques_circle: k must be >= 1");
    auto ch = m.chords();
    const int n = static_cast<int>(ch.size());
    if (k == 1) return n;
    std::uint64_t total = 0;
    std::vector<int> vals;
    for (int c = 0; c < n; ++c) {
        vals.clear();
        const int lc = ch[c].first, rc = ch[c].second;
        for (int a = 0; a < c; ++a)
            if (ch[a].second > lc && ch[a].second < rc) vals.push_back(ch[a].second);
        if (static_cast<int>(vals.size()) < k - 1) continue;
        total += detail::count_increasing(vals, m.points(), k - 1);
    }
    return total;
}

}  // namespace interlim
