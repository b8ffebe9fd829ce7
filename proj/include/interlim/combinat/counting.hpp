#pragma once

#include "../core/bigcount.hpp"

#include <stdexcept>
#include <string>

namespace interlim {

// m_n = (2n-1)!!
inline BigCount count_matchings(int n) {
    if (n < 0) throw std::invalid_argument("count_matchings: n must be >= 0");
    return double_factorial_odd(n);
}

// d_n^k = (n-k) m_{k+1} m_{n-k+1}
inline BigCount count_decomposed(int n, int k) {
    if (k < 2 || k > n - 2)
        throw std::invalid_argument("count_decomposed: k=" + std::to_string(k) + " outside [2, n-2] for n=" +
                                    std::to_string(n));
    return BigCount(n - k) * count_matchings(k + 1) * count_matchings(n - k + 1);
}

inline BigCount count_dyck(int n) {
    if (n < 0) throw std::invalid_argument("count_dyck: n must be >= 0");
    return catalan(n);
}

inline BigCount count_irreducible_dyck(int n) {
    if (n < 1) throw std::invalid_argument("count_irreducible_dyck: n must be >= 1");
    return catalan(n - 1);
}

// palindromic irreducible paths of semilength n <-> Dyck prefixes of length n-1
inline BigCount count_palindromic_irreducible(int n) {
    if (n < 1) throw std::invalid_argument("count_palindromic_irreducible: n must be >= 1");
    return binomial(n - 1, (n - 1) / 2);
}

// Matchings of size n fixed by the rotation of order d (by 2n/d positions):
// k! [z^k] exp(z [d even] + d z^2 / 2) with k = 2n/d.
inline BigCount count_symmetric_matchings(int n, int d) {
    if (n < 1 || d < 2 || (2 * n) % d != 0)
        throw std::invalid_argument("count_symmetric_matchings: need d >= 2 dividing 2n (n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    const int k = 2 * n / d;
    const int even = d % 2 == 0 ? 1 : 0;
    BigCount a0 = 1, a1 = even;
    if (k == 0) return a0;
    for (int j = 2; j <= k; ++j) {
        BigCount a2 = even * a1 + BigCount(d) * (j - 1) * a0;
        a0 = a1;
        a1 = a2;
    }
    return a1;
}

}  // namespace interlim
