#pragma once

#include "../core/random.hpp"
#include "matching.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Arc of consecutive points start, start+1, ... (mod 2n), 0-based.
struct CircularInterval {
    int start = 0;
    int length = 0;

    bool contains(int i, int N) const {
        if (length <= 0) return false;
        int off = ((i - start) % N + N) % N;
        return off < length;
    }
};

// Parts C1..C4 in circular order; position 0 (label 1) lies in C1.
struct Decomposition {
    std::array<CircularInterval, 4> part{};
    int k = 0;

    bool operator==(const Decomposition& o) const {
        if (k != o.k) return false;
        for (int i = 0; i < 4; ++i)
            if (part[i].length != o.part[i].length || (part[i].length && part[i].start != o.part[i].start))
                return false;
        return true;
    }

    // part index (0..3) of every point
    std::vector<int> labels(int N) const {
        std::vector<int> lab(N, -1);
        for (int q = 0; q < 4; ++q)
            for (int t = 0; t < part[q].length; ++t) lab[(part[q].start + t) % N] = q;
        return lab;
    }

    std::string to_string(int N) const {
        std::string s;
        for (int q = 0; q < 4; ++q) {
            s += "C" + std::to_string(q + 1) + "={";
            for (int t = 0; t < part[q].length; ++t) {
                if (t) s += ',';
                s += std::to_string((part[q].start + t) % N + 1);
            }
            s += "} ";
        }
        return s + "k=" + std::to_string(k);
    }
};

// Builds a decomposition from C1's start and the four lengths.
inline Decomposition make_decomposition(int N, int s, int l1, int l2, int l3, int l4, int k) {
    Decomposition d;
    int at = s;
    const int len[4] = {l1, l2, l3, l4};
    for (int q = 0; q < 4; ++q) {
        d.part[q] = {len[q] ? at % N : 0, len[q]};
        at += len[q];
    }
    d.k = k;
    return d;
}

// Empty string if d is a valid k-decomposition of m, else the reason.
inline std::string decomposition_error(const Matching& m, const Decomposition& d) {
    const int N = m.points(), n = m.size();
    int total = 0;
    for (auto& p : d.part) {
        if (p.length < 0 || p.start < 0 || p.start >= std::max(N, 1)) return "part out of range";
        total += p.length;
    }
    if (total != N) return "parts do not cover all points";
    if (d.part[0].length < 1 || !d.part[0].contains(0, N)) return "point 1 not in C1";
    int at = d.part[0].start + d.part[0].length;
    for (int q = 1; q < 4; ++q) {
        if (d.part[q].length && d.part[q].start != at % N) return "parts not consecutive";
        at += d.part[q].length;
    }
    auto lab = d.labels(N);
    int even = 0;
    for (int i = 0; i < N; ++i) {
        if (lab[i] < 0) return "parts overlap";
        if ((lab[i] & 1) != (lab[m[i]] & 1)) return "chord " + std::to_string(i + 1) + "-" + std::to_string(m[i] + 1) +
                                                     " joins C1/C3 with C2/C4";
        if (lab[i] & 1) ++even;
    }
    if (even / 2 != d.k) return "k does not match the chord count of C2 u C4";
    if (d.k < 2 || d.k > n - 2) return "k outside [2, n-2]";
    return {};
}

namespace detail {

// Random chord hashes: a set S is closed under m iff the XOR of the hashes
// of its points is zero, up to a 2^-64 false positive that callers verify.
struct ChordHash {
    std::vector<std::uint64_t> prefix;  // prefix[i] = xor of hash over points < i

    explicit ChordHash(const Matching& m) : prefix(m.points() + 1, 0) {
        const int N = m.points();
        for (int i = 0; i < N; ++i) {
            int lo = std::min(i, m[i]);
            prefix[i + 1] = prefix[i] ^ splitmix64(0x5bd1e995ULL * (lo + 1));
        }
    }

    std::uint64_t arc(int start, int length) const {
        const int N = static_cast<int>(prefix.size()) - 1;
        if (length <= 0) return 0;
        int e = start + length;
        return e <= N ? prefix[start] ^ prefix[e] : prefix[start] ^ prefix[e - N];
    }
};

inline bool arcs_closed(const Matching& m, CircularInterval a, CircularInterval b) {
    const int N = m.points();
    for (auto arc : {a, b})
        for (int t = 0; t < arc.length; ++t) {
            int p = m[(arc.start + t) % N];
            if (!a.contains(p, N) && !b.contains(p, N)) return false;
        }
    return true;
}

// Visits every decomposition with k in [kmin, kmax]; fn returns false to stop.
template <class Fn>
void visit_decompositions(const Matching& m, int kmin, int kmax, Fn&& fn) {
    const int N = m.points();
    ChordHash h(m);
    for (int s = 0; s < N; ++s) {
        for (int l1 = 1; l1 <= N; ++l1) {
            if (!(s == 0 || s + l1 - 1 >= N)) continue;
            const int rest = N - l1;
            for (int l2 = 0; l2 <= rest; ++l2) {
                for (int l3 = 0; l2 + l3 <= rest; ++l3) {
                    const int l4 = rest - l2 - l3;
                    if ((l2 + l4) % 2) continue;
                    const int k = (l2 + l4) / 2;
                    if (k < kmin || k > kmax) continue;
                    CircularInterval c2{(s + l1) % N, l2}, c4{(s + l1 + l2 + l3) % N, l4};
                    if ((h.arc(c2.start, l2) ^ h.arc(c4.start, l4)) != 0) continue;
                    if (!arcs_closed(m, c2, c4)) continue;
                    if (!fn(make_decomposition(N, s, l1, l2, l3, l4, k))) return;
                }
            }
        }
    }
}

}  // namespace detail

// Witness search over all circular 4-interval partitions.
inline std::optional<Decomposition> k_decomposition(const Matching& m, int k) {
    if (k < 2 || k > m.size() - 2)
        throw std::invalid_argument("k_decomposition: k=" + std::to_string(k) + " outside [2, n-2] for n=" +
                                    std::to_string(m.size()));
    std::optional<Decomposition> out;
    detail::visit_decompositions(m, k, k, [&](const Decomposition& d) {
        out = d;
        return false;
    });
    return out;
}

// Every k-decomposition of m for all k in [2, n-2].
inline std::vector<Decomposition> all_decompositions(const Matching& m) {
    std::vector<Decomposition> out;
    detail::visit_decompositions(m, 2, m.size() - 2, [&](const Decomposition& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

// Indecomposability by brute-force witness search over every k.
inline bool is_indecomposable_bruteforce(const Matching& m) {
    if (m.size() < 4) return true;
    bool found = false;
    detail::visit_decompositions(m, 2, m.size() - 2, [&](const Decomposition&) {
        found = true;
        return false;
    });
    return !found;
}

// Exact O(n^2) test. Any closed set S made of at most two arcs, with
// 2..n-2 chords, gives a decomposition. For an arc A, the smallest such S
// containing A as one of its arcs is A plus the hull of the partners that
// fall outside A; it suffices to test that candidate for every arc.
inline bool is_indecomposable(const Matching& m) {
    const int n = m.size(), N = m.points();
    if (n < 4) return true;
    // a chord (i,i+1), (i,i+2), or two chords on adjacent pairs already
    // yield a 2-decomposition
    Xyz s = xyz_stats(m);
    if (s.x || s.y || s.z) return false;

    const auto& pt = m.partner();
    detail::ChordHash h(m);
    std::vector<int> lo_row(2 * N, 0);
    for (int a = 2 * N - 1; a >= 0; --a) {
        const int am = a % N;
        const int pa = pt[am];
        int hi = -1;
        const int bmax = std::min(a + N - 1, 2 * N);
        for (int b = a; b < bmax; ++b) {
            const int bm = b % N;
            // offset of pt[a] past b+1, folded into the running minimum of row b
            int e = pa - bm - 1;
            if (e < 0) e += N;
            if (e < 0) e += N;
            lo_row[b] = (b == a) ? e : std::min(lo_row[b], e);
            int d = pt[bm] - am;
            if (d < 0) d += N;
            if (d > hi) hi = d;
            if (a >= N) continue;
            const int L = b - a + 1;
            if (hi < L) {
                // the arc is closed on its own
                int k = L / 2;
                if (k >= 2 && k <= n - 2) return false;
                continue;
            }
            const int lo_off = L + lo_row[b];
            const int blen = hi - lo_off + 1;
            const int size = L + blen;
            if (size % 2 || size / 2 < 2 || size / 2 > n - 2) continue;
            if ((h.arc(am, L) ^ h.arc((a + lo_off) % N, blen)) != 0) continue;
            if (detail::arcs_closed(m, {am, L}, {(a + lo_off) % N, blen})) return false;
        }
    }
    return true;
}

}  // namespace interlim
