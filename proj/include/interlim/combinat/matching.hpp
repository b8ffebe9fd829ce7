#pragma once

#include "../core/random.hpp"
#include "../core/text.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interlim {

// Fixed-point-free involution on 2n points, stored 0-based.
class Matching {
public:
    Matching() = default;

    static Matching from_partner(std::vector<int> partner) {
        validate(partner);
        Matching m;
        m.p_ = std::move(partner);
        return m;
    }

    // pairs given 1-based
    static Matching from_pairs(const std::vector<std::pair<int, int>>& pairs) {
        std::vector<int> p(2 * pairs.size(), -1);
        for (auto [a, b] : pairs) {
            if (a < 1 || b < 1 || a > static_cast<int>(p.size()) || b > static_cast<int>(p.size()))
                throw std::invalid_argument("matching: point out of range 1.." + std::to_string(p.size()));
            if (p[a - 1] != -1 || p[b - 1] != -1)
                throw std::invalid_argument("matching: point used twice");
            p[a - 1] = b - 1;
            p[b - 1] = a - 1;
        }
        return from_partner(std::move(p));
    }

    int size() const { return static_cast<int>(p_.size() / 2); }
    int points() const { return static_cast<int>(p_.size()); }
    int operator[](int i) const { return p_[i]; }
    const std::vector<int>& partner() const { return p_; }

    bool operator==(const Matching& o) const { return p_ == o.p_; }
    bool operator<(const Matching& o) const { return p_ < o.p_; }

    // chords as (left, right), left < right, sorted by left (0-based)
    std::vector<std::pair<int, int>> chords() const {
        std::vector<std::pair<int, int>> c;
        for (int i = 0; i < points(); ++i)
            if (i < p_[i]) c.emplace_back(i, p_[i]);
        return c;
    }

    std::string to_string() const {
        std::string s;
        for (auto [a, b] : chords()) {
            if (!s.empty()) s += ' ';
            s += std::to_string(a + 1) + "-" + std::to_string(b + 1);
        }
        return s;
    }

private:
    static void validate(const std::vector<int>& p) {
        if (p.size() % 2) throw std::invalid_argument("matching: odd number of points");
        const int N = static_cast<int>(p.size());
        for (int i = 0; i < N; ++i) {
            if (p[i] < 0 || p[i] >= N)
                throw std::invalid_argument("matching: point " + std::to_string(i + 1) + " has no valid partner");
            if (p[i] == i) throw std::invalid_argument("matching: fixed point at " + std::to_string(i + 1));
            if (p[p[i]] != i) throw std::invalid_argument("matching: not an involution at " + std::to_string(i + 1));
        }
    }

    std::vector<int> p_;
};

// "1-3 2-4"
inline Matching parse_matching(const std::string& text) {
    auto toks = split_tokens(text);
    if (toks.empty()) throw std::invalid_argument("matching: empty input");
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> seen(2 * toks.size() + 1, 0);
    for (auto& t : toks) {
        auto dash = t.text.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("matching: expected a-b at column " + std::to_string(t.column));
        int a = static_cast<int>(parse_positive(t.text.substr(0, dash), t.column, "matching"));
        int b = static_cast<int>(parse_positive(t.text.substr(dash + 1), t.column + dash + 1, "matching"));
        const int N = static_cast<int>(2 * toks.size());
        if (a > N || b > N)
            throw std::invalid_argument("matching: point out of range 1.." + std::to_string(N) + " at column " +
                                        std::to_string(t.column));
        if (a == b || seen[a] || seen[b])
            throw std::invalid_argument("matching: point repeated at column " + std::to_string(t.column));
        seen[a] = seen[b] = 1;
        pairs.emplace_back(a, b);
    }
    return Matching::from_pairs(pairs);
}

// Sequential pairing: match any free point with a uniform other free point.
inline Matching sample_matching(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_matching: n must be >= 1");
    const int N = 2 * n;
    std::vector<int> free(N), p(N);
    for (int i = 0; i < N; ++i) free[i] = N - 1 - i;
    int left = N;
    while (left > 0) {
        int a = free[--left];
        int j = static_cast<int>(rng.below(left));
        int b = free[j];
        free[j] = free[--left];
        p[a] = b;
        p[b] = a;
    }
    return Matching::from_partner(std::move(p));
}

// All matchings on 2n points (n small).
template <class Fn>
void for_each_matching(int n, Fn&& fn) {
    const int N = 2 * n;
    std::vector<int> p(N, -1);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        while (a < N && p[a] != -1) ++a;
        if (a == N) {
            fn(Matching::from_partner(p));
            return;
        }
        for (int b = a + 1; b < N; ++b) {
            if (p[b] != -1) continue;
            p[a] = b;
            p[b] = a;
            self(self);
            p[a] = p[b] = -1;
        }
    };
    rec(rec);
}

// chord (i, j) -> (i+1, j+1) mod 2n
inline Matching shift(const Matching& m) {
    const int N = m.points();
    std::vector<int> p(N);
    for (int i = 0; i < N; ++i) p[(i + 1) % N] = (m[i] + 1) % N;
    return Matching::from_partner(std::move(p));
}

// i -> 2n + 1 - i
inline Matching reversal(const Matching& m) {
    const int N = m.points();
    std::vector<int> p(N);
    for (int i = 0; i < N; ++i) p[N - 1 - i] = N - 1 - m[i];
    return Matching::from_partner(std::move(p));
}

inline bool chords_cross(const Matching& m, int a, int b) {
    int a1 = std::min(a, m[a]), a2 = std::max(a, m[a]);
    int b1 = std::min(b, m[b]), b2 = std::max(b, m[b]);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

struct Xyz {
    int x = 0, y = 0, z = 0;
    bool operator==(const Xyz& o) const { return x == o.x && y == o.y && z == o.z; }
};

// x = #{i : m(i) = i+1}, y = #{j : m(j) = j+2},
// z = #{k < l, l-k != +-1 : {m(k), m(k+1)} = {l, l+1}}, all mod 2n.
inline Xyz xyz_stats(const Matching& m) {
    const int N = m.points();
    Xyz r;
    auto mod = [N](int v) { return ((v % N) + N) % N; };
    for (int i = 0; i < N; ++i) {
        if (m[i] == mod(i + 1)) ++r.x;
        if (m[i] == mod(i + 2)) ++r.y;
        int a = m[i], b = m[mod(i + 1)];
        std::array<int, 2> cand{-1, -1};
        if (b == mod(a + 1)) cand[0] = a;
        if (a == mod(b + 1)) cand[1] = b;
        for (int l : cand) {
            if (l <= i) continue;
            int d = mod(l - i);
            if (d == 1 || d == N - 1) continue;
            ++r.z;
        }
    }
    return r;
}

}  // namespace interlim
