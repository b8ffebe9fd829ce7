#pragma once

#include "decomposition.hpp"
#include "matching.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Matching with one distinguished chord, identified by its smaller endpoint.
struct MarkedMatching {
    Matching matching;
    int mark = 0;  // 0-based smaller endpoint of the marked chord

    bool operator==(const MarkedMatching& o) const { return matching == o.matching && mark == o.mark; }
    bool operator<(const MarkedMatching& o) const {
        return matching == o.matching ? mark < o.mark : matching < o.matching;
    }
};

struct PhiImage {
    MarkedMatching marked;  // size n-k+1, mark not on the chord through 1
    Matching small;         // size k+1

    bool operator==(const PhiImage& o) const { return marked == o.marked && small == o.small; }
    bool operator<(const PhiImage& o) const { return marked == o.marked ? small < o.small : marked < o.marked; }
};

struct DecomposedMatching {
    Matching matching;
    Decomposition decomposition;

    bool operator==(const DecomposedMatching& o) const {
        return matching == o.matching && decomposition == o.decomposition;
    }
};

namespace detail {

inline std::vector<int> arc_points(const CircularInterval& c, int N) {
    std::vector<int> v;
    for (int t = 0; t < c.length; ++t) v.push_back((c.start + t) % N);
    return v;
}

}  // namespace detail

// Contract C2 and C4 to a single chord X-Y inside C1,C3 (marked), and C1, C3
// to a chord Q-P with Q = 1 on the other side (small).
inline PhiImage phi(const Matching& m, const Decomposition& d) {
    std::string err = decomposition_error(m, d);
    if (!err.empty()) throw std::invalid_argument("phi: invalid decomposition: " + err);
    const int N = m.points();
    auto c1 = detail::arc_points(d.part[0], N), c2 = detail::arc_points(d.part[1], N),
         c3 = detail::arc_points(d.part[2], N), c4 = detail::arc_points(d.part[3], N);

    // marked side: C1, X, C3, Y read circularly from the original point 0
    const int X = -1, Y = -2;
    std::vector<int> seq;
    seq.insert(seq.end(), c1.begin(), c1.end());
    seq.push_back(X);
    seq.insert(seq.end(), c3.begin(), c3.end());
    seq.push_back(Y);
    std::size_t zero = 0;
    while (seq[zero] != 0) ++zero;
    std::vector<int> pos(N, -1);
    const int N1 = static_cast<int>(seq.size());
    int px = 0, py = 0;
    for (int i = 0; i < N1; ++i) {
        int v = seq[(zero + i) % N1];
        if (v == X) px = i;
        else if (v == Y) py = i;
        else pos[v] = i;
    }
    std::vector<int> p1(N1);
    for (int i = 0; i < N1; ++i) {
        int v = seq[(zero + i) % N1];
        if (v == X) p1[i] = py;
        else if (v == Y) p1[i] = px;
        else p1[i] = pos[m[v]];
    }

    // small side: Q, C2, P, C4
    const int N2 = 2 * (d.k + 1);
    std::vector<int> pos2(N, -1);
    int at = 1;
    for (int v : c2) pos2[v] = at++;
    const int P = at++;
    for (int v : c4) pos2[v] = at++;
    std::vector<int> p2(N2);
    p2[0] = P;
    p2[P] = 0;
    for (int v : c2) p2[pos2[v]] = pos2[m[v]];
    for (int v : c4) p2[pos2[v]] = pos2[m[v]];

    PhiImage r;
    r.marked.matching = Matching::from_partner(std::move(p1));
    r.marked.mark = std::min(px, py);
    r.small = Matching::from_partner(std::move(p2));
    return r;
}

inline DecomposedMatching phi_inverse(const PhiImage& img) {
    const Matching& m1 = img.marked.matching;
    const Matching& m2 = img.small;
    const int N1 = m1.points(), N2 = m2.points();
    const int k = m2.size() - 1;
    const int n = m1.size() + k - 1;
    if (img.marked.mark < 0 || img.marked.mark >= N1)
        throw std::invalid_argument("phi_inverse: mark out of range");
    const int u = std::min(img.marked.mark, m1[img.marked.mark]);
    const int v = std::max(img.marked.mark, m1[img.marked.mark]);
    if (u != img.marked.mark) throw std::invalid_argument("phi_inverse: mark must be the smaller endpoint");
    if (u == 0) throw std::invalid_argument("phi_inverse: mark lies on the chord through point 1");
    if (k < 2 || k > n - 2)
        throw std::invalid_argument("phi_inverse: sizes give k=" + std::to_string(k) + " outside [2, n-2]");
    const int P = m2[0];
    const int N = 2 * n;

    // new label of each point of m1 (a) and of m2 (b)
    std::vector<int> a(N1, -1), b(N2, -1);
    int at = 0;
    for (int i = 0; i < u; ++i) a[i] = at++;          // C1 from point 1 on
    for (int i = 1; i < P; ++i) b[i] = at++;          // C2
    for (int i = u + 1; i < v; ++i) a[i] = at++;      // C3
    for (int i = P + 1; i < N2; ++i) b[i] = at++;     // C4
    const int head = N1 - 1 - v;
    for (int i = v + 1; i < N1; ++i) a[i] = at++;     // start of C1, wraps to point 1

    std::vector<int> p(N, -1);
    for (int i = 0; i < N1; ++i)
        if (i != u && i != v) p[a[i]] = a[m1[i]];
    for (int i = 1; i < N2; ++i)
        if (i != P) p[b[i]] = b[m2[i]];

    const int l1 = u + head, l2 = P - 1, l3 = v - u - 1, l4 = N2 - 1 - P;
    const int s = head ? N - head : 0;
    DecomposedMatching r{Matching::from_partner(std::move(p)), make_decomposition(N, s, l1, l2, l3, l4, k)};
    return r;
}

}  // namespace interlim
