#pragma once

#include "matching.hpp"

namespace interlim {

// True if some non-identity rotation or reflection of the 2n points maps m to
// itself. Checks every element of the dihedral group of order 4n.
inline bool has_nontrivial_symmetry(const Matching& m) {
    const int N = m.points();
    auto fixed_by = [&](auto g) {
        for (int i = 0; i < N; ++i)
            if (m[g(i)] != g(m[i])) return false;
        return true;
    };
    for (int r = 1; r < N; ++r)
        if (fixed_by([&](int i) { return (i + r) % N; })) return true;
    for (int c = 0; c < N; ++c)
        if (fixed_by([&](int i) { return ((c - i) % N + N) % N; })) return true;
    return false;
}

// Is m fixed by rotation by r positions?
inline bool fixed_by_rotation(const Matching& m, int r) {
    const int N = m.points();
    for (int i = 0; i < N; ++i)
        if (m[(i + r) % N] != (m[i] + r) % N) return false;
    return true;
}

}  // namespace interlim
