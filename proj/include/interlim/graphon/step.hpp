#pragma once

#include "../graphs/ugraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// W_G for a labeled graph: cell (i, j) is A_{order[i], order[j]}.
struct StepGraphon {
    int n = 0;
    std::vector<std::uint8_t> cells;

    int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

inline std::vector<int> degree_descending_order(const UGraph& g) {
    std::vector<int> ord(g.size()), deg(g.size());
    for (int i = 0; i < g.size(); ++i) deg[i] = g.degree(i);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    return ord;
}

inline StepGraphon step_graphon(const UGraph& g, const std::vector<int>& order) {
    const int n = g.size();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("step_graphon: order has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("step_graphon: order is not a permutation of the vertices");
        seen[v] = 1;
    }
    StepGraphon s{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.cells[static_cast<std::size_t>(i) * n + j] = g.has_edge(order[i], order[j]);
    return s;
}

// Mean of several step graphons of the same size.
struct AveragedStepGraphon {
    int n = 0;
    std::vector<double> cells;
    int count = 0;

    void add(const StepGraphon& s) {
        if (count == 0) {
            n = s.n;
            cells.assign(static_cast<std::size_t>(n) * n, 0.0);
        } else if (s.n != n) {
            throw std::invalid_argument("AveragedStepGraphon: size mismatch");
        }
        ++count;
        for (std::size_t t = 0; t < cells.size(); ++t) cells[t] += (s.cells[t] - cells[t]) / count;
    }

    double at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

inline std::string to_csv(const StepGraphon& s) {
    std::string out;
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            if (j) out += ',';
            out += s.at(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const AveragedStepGraphon& s) {
    std::string out;
    char buf[32];
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            if (j) out += ',';
            std::snprintf(buf, sizeof buf, "%.6g", s.at(i, j));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

// Binary P5, one pixel per cell: 0 -> 255 (white), 1 -> 0 (black).
inline std::string to_pgm(const StepGraphon& s) {
    std::string out = "P5\n" + std::to_string(s.n) + " " + std::to_string(s.n) + "\n255\n";
    for (auto c : s.cells) out.push_back(static_cast<char>(c ? 0 : 255));
    return out;
}

inline std::string to_pgm(const AveragedStepGraphon& s) {
    std::string out = "P5\n" + std::to_string(s.n) + " " + std::to_string(s.n) + "\n255\n";
    for (double v : s.cells) out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * (1.0 - v)))));
    return out;
}

}  // namespace interlim
