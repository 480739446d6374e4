#ifndef PALINFORGE_PSI_HPP
#define PALINFORGE_PSI_HPP

#include "stream.hpp"

namespace palinforge {

// Iterated palindromic closure over single letters: each directive letter is
// appended and the closure taken. Images of distinct directives are distinct,
// and every image prefix of the form (shorter image) persists.
inline word psi(std::string_view directive) {
    word p;
    for (char a : directive) {
        p.push_back(a);
        p = pal_closure(p);
    }
    return p;
}

// Iterated palindromic closure driven by whole tokens of a code.
inline word psi_x(const std::vector<word>& tokens, const code& X) {
    word p;
    for (const auto& x : tokens) {
        if (!X.contains(x)) throw std::invalid_argument("psi_x: token outside code: " + x);
        p += x;
        p = pal_closure(p);
    }
    return p;
}

// First target_len letters of the limit word of an infinite directive
// stream. Iterates until the running palindromic prefix is long enough;
// a finite stream that runs dry first raises stream_exhausted.
inline word psi_stream(const directive_stream& d, std::size_t target_len) {
    word p;
    for (std::size_t i = 0; p.size() < target_len; ++i) {
        p += d.token(i);
        p = pal_closure(p);
    }
    p.resize(target_len);
    return p;
}

// Recover the letter directive from its image, when the argument is one.
inline std::optional<word> inverse_psi(std::string_view p) {
    word directive;
    word cur;
    while (cur.size() < p.size()) {
        char a = p[cur.size()];
        directive.push_back(a);
        cur.push_back(a);
        cur = pal_closure(cur);
        if (cur.size() > p.size() || p.substr(0, cur.size()) != cur) return std::nullopt;
    }
    return directive;
}

// Longest palindromic prefix of p immediately followed by the block y
// inside p, if any.
inline std::optional<word> delta_prefix(std::string_view p, std::string_view y) {
    if (y.empty()) throw std::invalid_argument("delta_prefix: empty block");
    if (y.size() > p.size()) return std::nullopt;
    for (std::size_t len = p.size() - y.size() + 1; len-- > 0;) {
        if (p.substr(len, y.size()) != y) continue;
        std::string_view head = p.substr(0, len);
        if (is_palindrome(head)) return word(head);
    }
    return std::nullopt;
}

// One closure step (p y)^+ for palindromic p, computed without rescanning
// when possible: if Delta is the longest palindromic prefix of p followed by
// y, the longest palindromic suffix of p y is y~ Delta y, so the step equals
// p with its leading Delta stripped, concatenated with p. Any longer
// palindromic suffix of p y would exhibit a longer such prefix. Without a
// Delta the step falls back to the direct closure.
inline word justin_step(std::string_view p, std::string_view y) {
    if (auto delta = delta_prefix(p, y)) {
        word out(p.substr(0, p.size() - delta->size()));
        out.append(p);
        return out;
    }
    word out(p);
    out.append(y);
    return pal_closure(out);
}

// Fullness of a directive prefix z = x_1 .. x_m with image P:
//   F1: every element of X occurs among the tokens;
//   F2: the minimal period of P is at least the longest element length;
//   F3: for each x with last occurrence x_r, the longest palindromic prefix
//       of P followed by x is the image of x_1 .. x_{r-1}.
struct fullness_report {
    bool full = false;
    std::string failed;                  // first violated condition: "F1", "F2" or "F3"
    std::map<word, std::size_t> last;    // token -> 1-based index of its last occurrence
};

inline fullness_report is_full(const std::vector<word>& tokens, const code& X) {
    if (tokens.empty()) throw std::invalid_argument("is_full: empty directive prefix");
    fullness_report rep;
    std::vector<word> ladder(tokens.size() + 1);  // ladder[i] = image of first i tokens
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!X.contains(tokens[i]))
            throw std::invalid_argument("is_full: token outside code: " + tokens[i]);
        word w = ladder[i] + tokens[i];
        ladder[i + 1] = pal_closure(w);
        rep.last[tokens[i]] = i + 1;
    }
    const word& P = ladder.back();
    for (const auto& x : X.words) {
        if (!rep.last.count(x)) {
            rep.failed = "F1";
            return rep;
        }
    }
    if (min_period(P) < X.ell()) {
        rep.failed = "F2";
        return rep;
    }
    for (const auto& x : X.words) {
        auto delta = delta_prefix(P, x);
        if (!delta || *delta != ladder[rep.last.at(x) - 1]) {
            rep.failed = "F3";
            return rep;
        }
    }
    rep.full = true;
    return rep;
}

// The morphism b -> P Delta_{mu(b)}^{-1} induced by a full directive prefix
// z with image P: each letter maps to P shortened by the palindromic prefix
// that precedes the corresponding token's reentry point.
inline morphism phi_z(const std::vector<word>& z, const code& X, const morphism& mu) {
    auto rep = is_full(z, X);
    if (!rep.full)
        throw std::invalid_argument("phi_z: directive prefix is not full (fails " + rep.failed + ")");
    std::set<word> image_set;
    for (const auto& [letter, x] : mu.images) {
        (void)letter;
        if (!X.contains(x))
            throw std::invalid_argument("phi_z: letter image outside code: " + x);
        image_set.insert(x);
    }
    if (image_set.size() != mu.images.size() || image_set.size() != X.words.size())
        throw std::invalid_argument("phi_z: letter images must enumerate the code exactly");
    word P = psi_x(z, X);
    morphism out;
    for (const auto& [letter, x] : mu.images) {
        auto delta = delta_prefix(P, x);
        if (!delta) throw std::logic_error("phi_z: fullness guarantees this prefix");
        out.images[letter] = word(P.substr(0, P.size() - delta->size()));
    }
    return out;
}

// Both sides of the seed identity: continuing a full prefix z by the tokens
// mu(w) equals the phi_z-image of the letter palindromization of w, followed
// by the image of z.
struct seed_identity {
    word continued;      // image of z mu(w)
    word reconstructed;  // phi_z(psi(w)) then image of z
    bool equal = false;
};

inline seed_identity justin_general(const std::vector<word>& z, std::string_view w,
                                    const code& X, const morphism& mu) {
    morphism phi = phi_z(z, X, mu);
    std::vector<word> tokens(z);
    for (char b : w) {
        auto it = mu.images.find(b);
        if (it == mu.images.end())
            throw std::invalid_argument(std::string("justin_general: letter outside domain: ") + b);
        tokens.push_back(it->second);
    }
    seed_identity out;
    out.continued = psi_x(tokens, X);
    out.reconstructed = phi.apply(psi(w)) + psi_x(z, X);
    out.equal = (out.continued == out.reconstructed);
    return out;
}

}  // namespace palinforge

#endif
