#pragma once

#include "../core/text.hpp"
#include "ugraph.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace interlim {

// "n=5; 1-2 2-3"
inline std::string to_edge_list(const UGraph& g) {
    std::string s = "n=" + std::to_string(g.size()) + ";";
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.has_edge(i, j)) s += " " + std::to_string(i + 1) + "-" + std::to_string(j + 1);
    return s;
}

inline UGraph parse_edge_list(const std::string& text) {
    auto semi = text.find(';');
    std::string head = text.substr(0, semi);
    auto toks = split_tokens(head);
    if (toks.size() != 1 || toks[0].text.rfind("n=", 0) != 0)
        throw std::invalid_argument("edge list: expected 'n=<count>;' at column 1");
    const int n = static_cast<int>(parse_positive(toks[0].text.substr(2), toks[0].column + 2, "edge list"));
    UGraph g(n);
    if (semi == std::string::npos) return g;
    for (auto& t : split_tokens(text.substr(semi + 1))) {
        const std::size_t col = t.column + semi + 1;
        auto dash = t.text.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("edge list: expected a-b at column " + std::to_string(col));
        int a = static_cast<int>(parse_positive(t.text.substr(0, dash), col, "edge list"));
        int b = static_cast<int>(parse_positive(t.text.substr(dash + 1), col + dash + 1, "edge list"));
        if (a > n || b > n)
            throw std::invalid_argument("edge list: vertex out of range 1.." + std::to_string(n) + " at column " +
                                        std::to_string(col));
        if (a == b) throw std::invalid_argument("edge list: self-loop at column " + std::to_string(col));
        g.add_edge(a - 1, b - 1);
    }
    return g;
}

inline std::string to_adjacency_csv(const UGraph& g) {
    std::string s;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
            if (j) s += ',';
            s += g.has_edge(i, j) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

inline UGraph parse_adjacency_csv(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<int> r;
        std::size_t col = 1;
        for (char c : line) {
            if (c == '0' || c == '1') r.push_back(c - '0');
            else if (c != ',' && c != ' ' && c != '\r')
                throw std::invalid_argument("adjacency csv: bad character at line " + std::to_string(lineno) +
                                            ", column " + std::to_string(col));
            ++col;
        }
        rows.push_back(std::move(r));
    }
    const int n = static_cast<int>(rows.size());
    UGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("adjacency csv: line " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        if (rows[i][i]) throw std::invalid_argument("adjacency csv: nonzero diagonal at row " + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("adjacency csv: asymmetric entry at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
            if (rows[i][j]) g.add_edge(i, j);
        }
    return g;
}

}  // namespace interlim
