#pragma once

#include "../core/random.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlim {

// Word over {U, D} with dominance; stored as the UD string itself.
class DyckPath {
public:
    DyckPath() = default;

    static DyckPath from_string(const std::string& s) {
        int h = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == 'U') ++h;
            else if (c == 'D') --h;
            else
                throw std::invalid_argument(std::string("dyck: unexpected character '") + c + "' at column " +
                                            std::to_string(i + 1));
            if (h < 0) throw std::invalid_argument("dyck: prefix goes below zero at column " + std::to_string(i + 1));
        }
        if (h != 0) throw std::invalid_argument("dyck: unbalanced word (final height " + std::to_string(h) + ")");
        DyckPath w;
        w.s_ = s;
        return w;
    }

    int size() const { return static_cast<int>(s_.size() / 2); }
    int length() const { return static_cast<int>(s_.size()); }
    bool up(int i) const { return s_[i] == 'U'; }
    const std::string& to_string() const { return s_; }

    bool operator==(const DyckPath& o) const { return s_ == o.s_; }
    bool operator<(const DyckPath& o) const { return s_ < o.s_; }

    // height stays positive strictly inside
    bool irreducible() const {
        int h = 0;
        for (int i = 0; i + 1 < length(); ++i) {
            h += up(i) ? 1 : -1;
            if (h == 0) return false;
        }
        return !s_.empty();
    }

private:
    std::string s_;
};

inline DyckPath parse_dyck(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("dyck: empty input");
    return DyckPath::from_string(t);
}

inline DyckPath mirror(const DyckPath& w) {
    std::string s(w.to_string().rbegin(), w.to_string().rend());
    for (char& c : s) c = (c == 'U') ? 'D' : 'U';
    return DyckPath::from_string(s);
}

inline bool is_palindromic(const DyckPath& w) { return mirror(w) == w; }

struct Heights {
    std::vector<int> h;  // h[i]: arrival height of the (i+1)-th up step
    std::vector<int> f;  // f[i]: up steps strictly between the (i+1)-th up and the (i+1)-th down
};

inline Heights heights(const DyckPath& w) {
    const int n = w.size();
    Heights r;
    r.h.reserve(n);
    r.f.reserve(n);
    int height = 0, ups = 0, downs = 0;
    for (int i = 0; i < w.length(); ++i) {
        if (w.up(i)) {
            ++height;
            ++ups;
            r.h.push_back(height);
        } else {
            --height;
            ++downs;
            r.f.push_back(ups - downs);
        }
    }
    return r;
}

inline std::vector<int> f_sequence(const DyckPath& w) { return heights(w).f; }

// Cycle lemma: a uniform arrangement of n U's and n+1 D's, rotated to start
// just after its first minimum, is a Dyck path followed by one D.
inline DyckPath sample_dyck(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_dyck: n must be >= 1");
    const int L = 2 * n + 1;
    std::string s(L, 'D');
    std::fill(s.begin(), s.begin() + n, 'U');
    for (int i = L - 1; i > 0; --i) std::swap(s[i], s[rng.below(i + 1)]);
    int h = 0, best = 0, at = 0;
    for (int i = 0; i < L - 1; ++i) {
        h += s[i] == 'U' ? 1 : -1;
        if (h < best) best = h, at = i + 1;
    }
    std::string r = s.substr(at) + s.substr(0, at);
    r.pop_back();
    return DyckPath::from_string(r);
}

inline DyckPath sample_irreducible_dyck(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_irreducible_dyck: n must be >= 1");
    if (n == 1) return DyckPath::from_string("UD");
    return DyckPath::from_string("U" + sample_dyck(n - 1, rng).to_string() + "D");
}

// All Dyck paths of semilength n in lexicographic order (n small).
template <class Fn>
void for_each_dyck(int n, Fn&& fn) {
    std::string s;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == n && downs == n) {
            fn(DyckPath::from_string(s));
            return;
        }
        if (downs < ups) {
            s.push_back('D');
            self(self, ups, downs + 1);
            s.pop_back();
        }
        if (ups < n) {
            s.push_back('U');
            self(self, ups + 1, downs);
            s.pop_back();
        }
    };
    rec(rec, 0, 0);
}

}  // namespace interlim
