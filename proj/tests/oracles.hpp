#ifndef PALINFORGE_TESTS_ORACLES_HPP
#define PALINFORGE_TESTS_ORACLES_HPP

// Brute-force reference implementations, deliberately independent of the
// library's algorithms: closures by exhaustive length search, periods by
// definition, ambiguity by parse counting.

#include <palinforge/palinforge.hpp>

#include <random>

namespace oracles {

using palinforge::antimorphism;
using palinforge::code;
using palinforge::word;

// Shortest palindrome with prefix w, by trying every target length and
// filling positions from the mirror constraint.
inline word brute_pal_closure(std::string_view w) {
    for (std::size_t L = w.size();; ++L) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            std::size_t m = L - 1 - i;
            if (m < w.size() && w[i] != w[m]) ok = false;
        }
        if (!ok) continue;
        word p(L, '?');
        for (std::size_t i = 0; i < L; ++i) p[i] = (i < w.size()) ? w[i] : w[L - 1 - i];
        return p;
    }
}

// Shortest theta-palindrome with prefix w: positions must satisfy
// p[i] = theta(p[L-1-i]).
inline word brute_theta_closure(std::string_view w, const antimorphism& th) {
    for (std::size_t L = w.size();; ++L) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            std::size_t m = L - 1 - i;
            if (m < w.size() && w[i] != th.image(w[m])) ok = false;
        }
        if (!ok) continue;
        word p(L, '?');
        for (std::size_t i = 0; i < L; ++i)
            p[i] = (i < w.size()) ? w[i] : th.image(w[L - 1 - i]);
        return p;
    }
}

// Minimal period straight from the definition.
inline std::size_t brute_min_period(std::string_view w) {
    for (std::size_t p = 1;; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size() && ok; ++i)
            if (w[i] != w[i + p]) ok = false;
        if (ok) return p;
    }
}

// Number of distinct token factorizations of w, clamped at cap.
inline std::size_t parse_count(std::string_view w, const code& X, std::size_t cap = 2) {
    std::vector<std::size_t> counts(w.size() + 1, 0);
    counts[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!counts[i]) continue;
        for (const auto& x : X.words)
            if (i + x.size() <= w.size() && w.substr(i, x.size()) == x)
                counts[i + x.size()] = std::min(cap, counts[i + x.size()] + counts[i]);
    }
    return counts[w.size()];
}

// Smallest word (length, then lexicographic) with two factorizations, among
// words up to max_len over the code's alphabet.
inline std::optional<word> brute_ambiguous(const code& X, std::size_t max_len) {
    for (std::size_t len = 1; len <= max_len; ++len) {
        word w(len, X.alphabet[0]);
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            if (parse_count(w, X) >= 2) return w;
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == X.alphabet.size()) {
                idx[--pos] = 0;
                w[pos] = X.alphabet[0];
            }
            if (pos == 0) break;
            ++idx[pos - 1];
            w[pos - 1] = X.alphabet[idx[pos - 1]];
        }
    }
    return std::nullopt;
}

// 2n applications of a -> ab, b -> ba to the letter a.
inline word doubling_orbit(std::size_t n) {
    word u = "a";
    for (std::size_t i = 0; i < 2 * n; ++i) {
        word next;
        for (char c : u) next += (c == 'a') ? "ab" : "ba";
        u = std::move(next);
    }
    return u;
}

inline word random_word(std::mt19937& rng, std::string_view alphabet, std::size_t min_len,
                        std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    word w;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[letter(rng)]);
    return w;
}

// Random prefix code: sampled words kept only while prefix-freeness holds.
inline code random_prefix_code(std::mt19937& rng, std::string_view alphabet,
                               std::size_t target_words, std::size_t max_len) {
    std::vector<word> ws;
    std::size_t guard = 0;
    while (ws.size() < target_words && guard++ < 200) {
        word cand = random_word(rng, alphabet, 1, max_len);
        bool ok = true;
        for (const auto& x : ws) {
            std::size_t m = std::min(x.size(), cand.size());
            if (x.substr(0, m) == cand.substr(0, m)) ok = false;  // comparable pair
        }
        if (ok) ws.push_back(cand);
    }
    if (ws.empty()) ws.push_back(word(1, alphabet[0]));
    return code(ws);
}

}  // namespace oracles

#endif
