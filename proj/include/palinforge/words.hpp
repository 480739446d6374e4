#ifndef PALINFORGE_WORDS_HPP
#define PALINFORGE_WORDS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palinforge {

using word = std::string;

// Sorted string of the distinct letters occurring in w.
inline std::string alphabet_of(std::string_view w) {
    std::string a(w);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline word reversed(std::string_view w) {
    return word(w.rbegin(), w.rend());
}

inline bool is_palindrome(std::string_view w) {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1]) return false;
    return true;
}

// Longest palindromic suffix, as a view into w. Empty only for the empty
// word: a single letter is always a palindrome. Longest-first scan with a
// direct palindrome test; quadratic in the worst case, which the expected
// input sizes tolerate.
inline std::string_view lps_view(std::string_view w) {
    std::size_t len = w.size();
    while (!is_palindrome(w.substr(w.size() - len))) --len;
    return w.substr(w.size() - len);
}

inline word lps(std::string_view w) {
    return word(lps_view(w));
}

// Shortest palindrome having w as a prefix: with w = u q, q the longest
// palindromic suffix, the closure is u q u~. Length < 2|w| for w != empty.
inline word pal_closure(std::string_view w) {
    std::string_view q = lps_view(w);
    std::string_view u = w.substr(0, w.size() - q.size());
    word out;
    out.reserve(w.size() + u.size());
    out.append(w);
    out.append(u.rbegin(), u.rend());
    return out;
}

// Smallest p >= 1 such that letters i and j agree whenever i == j (mod p).
// Equals |w| minus the longest proper border.
inline std::size_t min_period(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("min_period: empty word");
    std::vector<std::size_t> border(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && w[i] != w[b]) b = border[b - 1];
        if (w[i] == w[b]) ++b;
        border[i] = b;
    }
    return w.size() - border.back();
}

inline bool is_primitive(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
    for (std::size_t p = 1; p <= w.size() / 2; ++p) {
        if (w.size() % p != 0) continue;
        bool repeats = true;
        for (std::size_t i = p; i < w.size() && repeats; ++i)
            repeats = (w[i] == w[i - p]);
        if (repeats) return false;
    }
    return true;
}

// Distinct palindromic factors, the empty word included.
inline std::set<word> palindromic_factors(std::string_view w) {
    std::set<word> out;
    out.insert(word());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len)
            if (is_palindrome(w.substr(i, len))) out.emplace(w.substr(i, len));
    return out;
}

// A word of length n has at most n+1 distinct palindromic factors; rich
// words are the ones attaining the bound.
inline bool is_rich(std::string_view w) {
    return palindromic_factors(w).size() == w.size() + 1;
}

// p[n] counts distinct length-n factors for n <= horizon; right[n][j] counts
// length-n factors with exactly j distinct right extensions inside w, for
// n < horizon and 0 <= j <= d. The two tables satisfy
//   p(n+1) - p(n) = sum_j (j - 1) * right[n][j]
// entry-wise; the constructor checks this before returning.
struct factor_profile {
    std::string alphabet;
    std::size_t horizon = 0;
    std::vector<std::size_t> p;
    std::vector<std::vector<std::size_t>> right;

    bool extension_balance_holds() const {
        for (std::size_t n = 0; n < horizon; ++n) {
            long long delta = 0;
            for (std::size_t j = 0; j < right[n].size(); ++j)
                delta += (static_cast<long long>(j) - 1) * static_cast<long long>(right[n][j]);
            if (static_cast<long long>(p[n + 1]) - static_cast<long long>(p[n]) != delta)
                return false;
        }
        return true;
    }
};

inline factor_profile complexity_profile(std::string_view w, std::size_t horizon) {
    if (horizon > w.size())
        throw std::invalid_argument("complexity_profile: horizon exceeds word length");
    factor_profile out;
    out.alphabet = alphabet_of(w);
    out.horizon = horizon;
    const std::size_t d = out.alphabet.size();
    out.p.assign(horizon + 1, 0);
    out.right.assign(horizon, std::vector<std::size_t>(d + 1, 0));
    for (std::size_t n = 0; n <= horizon; ++n) {
        std::map<std::string_view, std::set<char>> ext;
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            auto [it, inserted] = ext.try_emplace(w.substr(i, n));
            (void)inserted;
            if (i + n < w.size()) it->second.insert(w[i + n]);
        }
        out.p[n] = ext.size();
        if (n < horizon)
            for (const auto& [factor, letters] : ext) {
                (void)factor;
                out.right[n][letters.size()]++;
            }
    }
    if (!out.extension_balance_holds())
        throw std::logic_error("complexity_profile: extension bookkeeping out of balance");
    return out;
}

enum class factor_side { left, right };

// A factor together with its distinct one-letter extensions on one side;
// only factors with order >= 2 are reported by special_factors.
struct special_factor {
    word factor;
    std::string extensions;  // sorted; order = extensions.size()
};

inline std::vector<special_factor> special_factors(std::string_view w, std::size_t n,
                                                   factor_side side) {
    if (n >= w.size())
        throw std::invalid_argument("special_factors: length must be below |w|");
    std::map<std::string_view, std::set<char>> ext;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        auto [it, inserted] = ext.try_emplace(w.substr(i, n));
        (void)inserted;
        if (side == factor_side::right) {
            if (i + n < w.size()) it->second.insert(w[i + n]);
        } else {
            if (i > 0) it->second.insert(w[i - 1]);
        }
    }
    std::vector<special_factor> out;
    for (const auto& [factor, letters] : ext)
        if (letters.size() >= 2)
            out.push_back({word(factor), std::string(letters.begin(), letters.end())});
    return out;
}

// Start positions of every (possibly overlapping) occurrence of u in w, plus
// the consecutive start-to-start differences.
struct occurrences {
    std::vector<std::size_t> positions;
    std::vector<std::size_t> gaps;
};

inline occurrences occurrence_gaps(std::string_view u, std::string_view w) {
    if (u.empty()) throw std::invalid_argument("occurrence_gaps: empty factor");
    occurrences out;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
        if (w.substr(i, u.size()) == u) out.positions.push_back(i);
    for (std::size_t k = 1; k < out.positions.size(); ++k)
        out.gaps.push_back(out.positions[k] - out.positions[k - 1]);
    return out;
}

// Letter-to-word substitution, extended to words by concatenation.
struct morphism {
    std::map<char, word> images;

    word apply(std::string_view w) const {
        word out;
        for (char c : w) {
            auto it = images.find(c);
            if (it == images.end())
                throw std::invalid_argument(std::string("morphism: letter outside domain: ") + c);
            out += it->second;
        }
        return out;
    }

    bool letter_injective() const {
        std::set<word> seen;
        for (const auto& [letter, image] : images) {
            (void)letter;
            if (!seen.insert(image).second) return false;
        }
        return true;
    }

    std::string domain() const {
        std::string out;
        for (const auto& [letter, image] : images) {
            (void)image;
            out.push_back(letter);
        }
        return out;
    }
};

}  // namespace palinforge

#endif
