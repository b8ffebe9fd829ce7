#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace interlim {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount factorial(unsigned n) {
    BigCount r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigCount catalan(unsigned n) { return binomial(2LL * n, n) / (n + 1); }

// (2n-1)!!, with m_0 = 1
inline BigCount double_factorial_odd(unsigned n) {
    BigCount r = 1;
    for (unsigned i = 1; i < 2 * n; i += 2) r *= i;
    return r;
}

}  // namespace interlim
