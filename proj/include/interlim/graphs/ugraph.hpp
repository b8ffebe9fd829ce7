#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Simple undirected graph; adjacency rows are bitsets.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("UGraph: negative vertex count");
    }

    static UGraph complete(int n) {
        UGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    int size() const { return n_; }

    bool has_edge(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1ULL;
    }

    void add_edge(int i, int j) {
        check(i);
        check(j);
        if (i == j) throw std::invalid_argument("UGraph: self-loop at vertex " + std::to_string(i + 1));
        set(i, j);
        set(j, i);
    }

    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    int words() const { return words_; }

    int degree(int i) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(i)[w]);
        return d;
    }

    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        const std::uint64_t* r = row(i);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w];
            while (x) {
                out.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    std::uint64_t edge_count() const {
        std::uint64_t s = 0;
        for (int i = 0; i < n_; ++i) s += degree(i);
        return s / 2;
    }

    bool operator==(const UGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    void check(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("UGraph: vertex " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n_));
    }

private:
    void set(int i, int j) { bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ULL << (j & 63); }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace interlim
