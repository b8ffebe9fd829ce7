#pragma once

#include "../core/random.hpp"
#include "../core/text.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// sigma stored 0-based: map[i] = sigma(i+1) - 1
class Permutation {
public:
    Permutation() = default;

    static Permutation from_zero_based(std::vector<int> map) {
        validate(map);
        Permutation p;
        p.map_ = std::move(map);
        return p;
    }

    // one-line notation with values in 1..n
    static Permutation from_one_line(const std::vector<int>& values) {
        std::vector<int> m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m[i] = values[i] - 1;
        return from_zero_based(std::move(m));
    }

    static Permutation identity(int n) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 0);
        return from_zero_based(std::move(m));
    }

    static Permutation decreasing(int n) {
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
        return from_zero_based(std::move(m));
    }

    int size() const { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_[i]; }
    const std::vector<int>& zero_based() const { return map_; }

    bool operator==(const Permutation& o) const { return map_ == o.map_; }
    bool operator<(const Permutation& o) const { return map_ < o.map_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(map_[i] + 1);
        }
        return s;
    }

private:
    static void validate(const std::vector<int>& m) {
        std::vector<char> seen(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 0 || m[i] >= static_cast<int>(m.size()))
                throw std::invalid_argument("permutation: value " + std::to_string(m[i] + 1) + " at position " +
                                            std::to_string(i + 1) + " out of range 1.." + std::to_string(m.size()));
            if (seen[m[i]])
                throw std::invalid_argument("permutation: value " + std::to_string(m[i] + 1) + " repeated at position " +
                                            std::to_string(i + 1));
            seen[m[i]] = 1;
        }
    }

    std::vector<int> map_;
};

// "7 1 4 6 5 2 3"; also accepts the compact digit form "2413" when n <= 9
inline Permutation parse_permutation(const std::string& text) {
    auto toks = split_tokens(text);
    if (toks.empty()) throw std::invalid_argument("permutation: empty input");
    std::vector<int> vals;
    if (toks.size() == 1 && toks[0].text.size() > 1) {
        for (std::size_t k = 0; k < toks[0].text.size(); ++k)
            vals.push_back(static_cast<int>(parse_positive(toks[0].text.substr(k, 1), toks[0].column + k, "permutation")));
    } else {
        for (auto& t : toks) vals.push_back(static_cast<int>(parse_positive(t.text, t.column, "permutation")));
    }
    return Permutation::from_one_line(vals);
}

inline Permutation sample_permutation(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_permutation: n must be >= 1");
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(m[i], m[rng.below(i + 1)]);
    return Permutation::from_zero_based(std::move(m));
}

// No interval of positions I with 2 <= |I| <= n-1 has a contiguous image.
inline bool is_simple(const Permutation& p) {
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        int lo = p[i], hi = p[i];
        for (int j = i + 1; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            int len = j - i + 1;
            if (len <= n - 1 && hi - lo == len - 1) return false;
        }
    }
    return true;
}

// All permutations of size n in lexicographic order (n small).
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    do {
        fn(Permutation::from_zero_based(m));
    } while (std::next_permutation(m.begin(), m.end()));
}

}  // namespace interlim
