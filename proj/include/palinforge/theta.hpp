#ifndef PALINFORGE_THETA_HPP
#define PALINFORGE_THETA_HPP

#include <array>

#include "psi.hpp"

namespace palinforge {

// Involutory antimorphism: reversal composed with a letter involution.
// The default involution is the identity, giving plain reversal.
class antimorphism {
  public:
    antimorphism() {
        for (std::size_t i = 0; i < map_.size(); ++i) map_[i] = static_cast<char>(i);
    }

    static antimorphism from_pairs(const std::vector<std::pair<char, char>>& pairs) {
        antimorphism th;
        std::set<char> used;
        for (auto [x, y] : pairs) {
            if (x == y) continue;  // explicit fixed letter
            if (!used.insert(x).second || !used.insert(y).second)
                throw std::invalid_argument("antimorphism: letter used in two pairs");
            th.map_[static_cast<unsigned char>(x)] = y;
            th.map_[static_cast<unsigned char>(y)] = x;
        }
        return th;
    }

    char image(char c) const { return map_[static_cast<unsigned char>(c)]; }

    word operator()(std::string_view w) const {
        word out;
        out.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(image(*it));
        return out;
    }

    // Fixed points of the map are the theta-palindromes.
    bool fixes(std::string_view w) const {
        for (std::size_t i = 0, j = w.size(); i < j; ++i, --j)
            if (w[i] != image(w[j - 1])) return false;
        return true;
    }

  private:
    std::array<char, 256> map_;
};

// Longest theta-palindromic suffix of w, as a view.
inline std::string_view theta_lps_view(std::string_view w, const antimorphism& th) {
    std::size_t len = w.size();
    while (!th.fixes(w.substr(w.size() - len))) --len;
    return w.substr(w.size() - len);
}

// Shortest theta-palindrome with prefix w: for w = s q, q the longest
// theta-palindromic suffix, the closure is s q theta(s).
inline word theta_closure(std::string_view w, const antimorphism& th) {
    std::string_view q = theta_lps_view(w, th);
    std::string_view s = w.substr(0, w.size() - q.size());
    word out(w);
    out += th(s);
    return out;
}

// Iterated theta-closure over single letters.
inline word psi_theta(std::string_view directive, const antimorphism& th) {
    word p;
    for (char a : directive) {
        p.push_back(a);
        p = theta_closure(p, th);
    }
    return p;
}

// Iterated theta-closure driven by whole tokens of a code.
inline word psi_theta_x(const std::vector<word>& tokens, const code& X, const antimorphism& th) {
    word p;
    for (const auto& x : tokens) {
        if (!X.contains(x)) throw std::invalid_argument("psi_theta_x: token outside code: " + x);
        p += x;
        p = theta_closure(p, th);
    }
    return p;
}

// The morphism sending each letter to its shortest theta-palindromic
// completion: a fixed letter maps to itself, an exchanged letter a to
// a theta(a)|_letter, i.e. the two-letter block a theta-image.
inline morphism mu_theta(const antimorphism& th, std::string_view alphabet) {
    morphism m;
    for (char a : alphabet) {
        char b = th.image(a);
        m.images[a] = (b == a) ? word(1, a) : word{a, b};
    }
    return m;
}

}  // namespace palinforge

#endif
