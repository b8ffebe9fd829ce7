#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        out.push_back({s.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

// Parses a positive decimal integer; throws with the 1-based column.
inline long long parse_positive(const std::string& s, std::size_t column, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty number at column " + std::to_string(column));
    long long v = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument(std::string(what) + ": unexpected character '" + s[k] +
                                        "' at column " + std::to_string(column + k));
        v = v * 10 + (s[k] - '0');
        if (v > 1000000000LL)
            throw std::invalid_argument(std::string(what) + ": number too large at column " + std::to_string(column));
    }
    if (v == 0) throw std::invalid_argument(std::string(what) + ": zero at column " + std::to_string(column) + " (labels are 1-based)");
    return v;
}

}  // namespace interlim
