#ifndef PALINFORGE_CODES_HPP
#define PALINFORGE_CODES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "words.hpp"

namespace palinforge {

// Finite set of non-empty words; stored sorted and deduplicated.
struct code {
    std::vector<word> words;
    std::string alphabet;

    explicit code(std::vector<word> ws) : words(std::move(ws)) {
        if (words.empty()) throw std::invalid_argument("code: empty set");
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        std::string all;
        for (const auto& x : words) {
            if (x.empty()) throw std::invalid_argument("code: empty word not allowed");
            all += x;
        }
        alphabet = alphabet_of(all);
    }

    // Longest element length.
    std::size_t ell() const {
        std::size_t m = 0;
        for (const auto& x : words) m = std::max(m, x.size());
        return m;
    }

    bool contains(std::string_view x) const {
        return std::binary_search(words.begin(), words.end(), x,
                                  [](std::string_view a, std::string_view b) { return a < b; });
    }
};

inline bool length_lex_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Smallest word (by length, then lexicographic) admitting two distinct
// token factorizations, if any. Runs a shortest-path search over the
// overhang states of the classic ambiguity test: a state is the part of one
// parse sticking out beyond the other, and the spelled word only grows along
// edges, so settling states in length-lex order of their smallest spelled
// word is exact. A state that is itself a full token closes an ambiguity.
inline std::optional<word> ambiguity_witness(const code& X) {
    using entry = std::pair<word, word>;  // (spelled word, overhang)
    auto worse = [](const entry& a, const entry& b) {
        return length_lex_less(b.first, a.first);
    };
    std::priority_queue<entry, std::vector<entry>, decltype(worse)> queue(worse);
    for (const auto& x : X.words)
        for (const auto& y : X.words)
            if (x.size() < y.size() && std::string_view(y).substr(0, x.size()) == x)
                queue.push({y, y.substr(x.size())});
    std::set<word> settled;
    while (!queue.empty()) {
        auto [spelled, over] = queue.top();
        queue.pop();
        if (!settled.insert(over).second) continue;
        if (X.contains(over)) return spelled;  // the two parses disagree on the first token
        for (const auto& x : X.words) {
            if (x.size() > over.size()) {
                if (std::string_view(x).substr(0, over.size()) == over)
                    queue.push({spelled + x.substr(over.size()), x.substr(over.size())});
            } else if (x.size() < over.size()) {
                if (std::string_view(over).substr(0, x.size()) == x)
                    queue.push({spelled, over.substr(x.size())});
            }
        }
    }
    return std::nullopt;
}

inline bool proper_prefix_of(std::string_view p, std::string_view w) {
    return p.size() < w.size() && w.substr(0, p.size()) == p;
}

inline bool proper_suffix_of(std::string_view s, std::string_view w) {
    return s.size() < w.size() && w.substr(w.size() - s.size()) == s;
}

inline bool is_prefix_code(const code& X) {
    for (const auto& x : X.words)
        for (const auto& y : X.words)
            if (proper_prefix_of(x, y)) return false;
    return true;
}

inline bool is_suffix_code(const code& X) {
    for (const auto& x : X.words)
        for (const auto& y : X.words)
            if (proper_suffix_of(x, y)) return false;
    return true;
}

// No element is a proper factor of another.
inline bool is_infix_code(const code& X) {
    for (const auto& x : X.words)
        for (const auto& y : X.words)
            if (x != y && y.find(x) != word::npos) return false;
    return true;
}

// Weakly overlap-free: no element splits as s p with s a proper non-empty
// suffix of some element and p a proper non-empty prefix of some element.
inline bool is_weakly_overlap_free(const code& X) {
    for (const auto& x : X.words)
        for (std::size_t cut = 1; cut < x.size(); ++cut) {
            std::string_view s = std::string_view(x).substr(0, cut);
            std::string_view p = std::string_view(x).substr(cut);
            bool s_ok = false, p_ok = false;
            for (const auto& y : X.words) {
                if (proper_suffix_of(s, y)) s_ok = true;
                if (proper_prefix_of(p, y)) p_ok = true;
            }
            if (s_ok && p_ok) return false;
        }
    return true;
}

// Exact test of sum_x d^(-|x|) == 1 over the alphabet size d, done in
// integers as sum_x d^(L-|x|) == d^L with L the longest element length.
inline bool kraft_equality(const code& X) {
    using boost::multiprecision::cpp_int;
    const std::size_t d = X.alphabet.size();
    const std::size_t L = X.ell();
    auto power = [&](std::size_t e) {
        cpp_int r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned>(d);
        return r;
    };
    cpp_int sum = 0;
    for (const auto& x : X.words) sum += power(L - x.size());
    return sum == power(L);
}

// Count of proper prefixes of elements (the empty word included) that are
// not themselves elements.
inline std::size_t proper_prefix_count(const code& X) {
    std::set<word> prefixes;
    for (const auto& x : X.words)
        for (std::size_t k = 0; k < x.size(); ++k) prefixes.emplace(x.substr(0, k));
    std::size_t n = 0;
    for (const auto& p : prefixes)
        if (!X.contains(p)) ++n;
    return n;
}

struct code_class {
    bool is_code = false;
    std::optional<word> ambiguous_word;  // length-lex smallest, when not a code
    bool prefix = false;
    bool suffix = false;
    bool bifix = false;
    bool infix = false;
    bool weakly_overlap_free = false;
    bool maximal_prefix = false;  // prefix and Kraft sum exactly 1
    std::optional<std::size_t> lambda;  // proper-prefix count, maximal prefix codes only
};

inline code_class classify(const code& X) {
    code_class out;
    out.ambiguous_word = ambiguity_witness(X);
    out.is_code = !out.ambiguous_word.has_value();
    out.prefix = is_prefix_code(X);
    out.suffix = is_suffix_code(X);
    out.bifix = out.prefix && out.suffix;
    out.infix = is_infix_code(X);
    out.weakly_overlap_free = is_weakly_overlap_free(X);
    out.maximal_prefix = out.prefix && kraft_equality(X);
    if (out.maximal_prefix) out.lambda = proper_prefix_count(X);
    return out;
}

// True iff r is a prefix of some element of X X^* (equivalently: tokens can
// spell r and keep going). Dynamic program over suffix offsets of r.
inline bool coverable(std::string_view r, const code& X) {
    std::vector<char> ok(r.size() + 1, 0);
    ok[r.size()] = 1;
    for (std::size_t i = r.size(); i-- > 0;) {
        std::string_view rest = r.substr(i);
        for (const auto& x : X.words) {
            if (rest.size() <= x.size()) {
                if (std::string_view(x).substr(0, rest.size()) == rest) {
                    ok[i] = 1;
                    break;
                }
            } else if (rest.substr(0, x.size()) == x && ok[i + x.size()]) {
                ok[i] = 1;
                break;
            }
        }
    }
    return ok[0];
}

// Membership of w in X^*.
inline bool in_star(std::string_view w, const code& X) {
    std::vector<char> reach(w.size() + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!reach[i]) continue;
        for (const auto& x : X.words)
            if (i + x.size() <= w.size() && w.substr(i, x.size()) == x) reach[i + x.size()] = 1;
    }
    return reach[w.size()];
}

// Token sequence spelling w exactly, if one exists. Unique when X is a code.
inline std::optional<std::vector<word>> factorize(std::string_view w, const code& X) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via(w.size() + 1, none);
    std::vector<char> reach(w.size() + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!reach[i]) continue;
        for (std::size_t t = 0; t < X.words.size(); ++t) {
            const auto& x = X.words[t];
            std::size_t j = i + x.size();
            if (j <= w.size() && w.substr(i, x.size()) == x && !reach[j]) {
                reach[j] = 1;
                via[j] = t;
            }
        }
    }
    if (!reach[w.size()]) return std::nullopt;
    std::vector<word> tokens;
    for (std::size_t j = w.size(); j > 0;) {
        const auto& x = X.words[via[j]];
        tokens.push_back(x);
        j -= x.size();
    }
    std::reverse(tokens.begin(), tokens.end());
    return tokens;
}

struct delay_result {
    enum class kind_t { finite, at_least, infinite } kind = kind_t::finite;
    std::size_t value = 0;  // finite: minimal verified delay; at_least: k_max + 1
    std::string reason;
};

namespace detail {

// Does delay k hold: for all x != x' in X and u in x X^k, u being a prefix
// of a word of x' X^* is impossible.
inline bool delay_holds(const code& X, std::size_t k) {
    // u compatible with x' X^*: either u is a prefix of x', or u = x' t with
    // t a prefix of some element of X X^*.
    auto compatible = [&](std::string_view u, const word& xp) {
        std::size_t m = std::min(u.size(), xp.size());
        if (u.substr(0, m) != std::string_view(xp).substr(0, m)) return false;
        if (u.size() <= xp.size()) return true;
        return coverable(u.substr(xp.size()), X);
    };
    std::function<bool(const word&, const word&, std::size_t)> extend =
        [&](const word& first, const word& u, std::size_t depth) {
            if (depth == k) {
                for (const auto& xp : X.words)
                    if (xp != first && compatible(u, xp)) return false;
                return true;
            }
            for (const auto& x : X.words)
                if (!extend(first, u + x, depth + 1)) return false;
            return true;
        };
    for (const auto& x : X.words)
        if (!extend(x, x, 0)) return false;
    return true;
}

}  // namespace detail

// Minimal deciphering delay, established exactly where theory allows:
// prefix codes have delay 0; a code meeting the Kraft sum with equality that
// is not prefix has infinite delay; otherwise delays 1..k_max are tested
// directly and failure reports a lower bound of k_max + 1.
inline delay_result deciphering_delay(const code& X, std::size_t k_max = 4) {
    if (ambiguity_witness(X))
        throw std::invalid_argument("deciphering_delay: set is not a code");
    delay_result out;
    if (is_prefix_code(X)) {
        out.kind = delay_result::kind_t::finite;
        out.value = 0;
        out.reason = "prefix code";
        return out;
    }
    if (kraft_equality(X)) {
        out.kind = delay_result::kind_t::infinite;
        out.reason = "meets the Kraft sum with equality without being prefix";
        return out;
    }
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (detail::delay_holds(X, k)) {
            out.kind = delay_result::kind_t::finite;
            out.value = k;
            out.reason = "verified directly";
            return out;
        }
    }
    out.kind = delay_result::kind_t::at_least;
    out.value = k_max + 1;
    out.reason = "no delay up to the tested bound";
    return out;
}

struct factorization_inconsistency : std::runtime_error {
    std::size_t position;
    explicit factorization_inconsistency(std::size_t pos)
        : std::runtime_error("factorize_stream: no token is compatible with the input at offset " +
                             std::to_string(pos)),
          position(pos) {}
};

struct stream_factorization {
    std::vector<word> tokens;    // committed tokens, a prefix of every valid parse
    word residual;               // letters not yet attributable to a unique token
    std::size_t committed = 0;   // letters covered by tokens
};

// Incremental factorization of a prefix of a one-sided infinite message.
// A token x matching the front is kept viable while the rest of the window,
// truncated to (delay + 1) tokens' worth of letters, can still be covered by
// X; the front token is committed once it is the only viable reading and no
// longer element could also match. Truncating the window only relaxes the
// viability test, so commitments are sound for any delay bound; the given
// delay guarantees completeness of commitment, not soundness.
inline stream_factorization factorize_stream(std::string_view prefix, const code& X,
                                             std::size_t delay) {
    stream_factorization out;
    const std::size_t window_tail = (delay + 1) * X.ell();
    std::size_t pos = 0;
    while (pos < prefix.size()) {
        std::string_view r = prefix.substr(pos);
        const word* sole = nullptr;
        std::size_t viable = 0;
        bool longer_possible = false;
        for (const auto& x : X.words) {
            if (x.size() > r.size()) {
                if (std::string_view(x).substr(0, r.size()) == r) longer_possible = true;
            } else if (r.substr(0, x.size()) == x) {
                std::string_view q = r.substr(x.size());
                if (q.size() > window_tail) q = q.substr(0, window_tail);
                if (coverable(q, X)) {
                    ++viable;
                    sole = &x;
                }
            }
        }
        if (viable == 0 && !longer_possible) {
            // Report the first dead offset: walk whole tokens forward from
            // pos until no element of X matches even partially.
            std::vector<char> reach(r.size() + 1, 0);
            reach[0] = 1;
            std::size_t stall = 0;
            for (std::size_t i = 0; i <= r.size(); ++i) {
                if (!reach[i]) continue;
                stall = i;
                for (const auto& x : X.words)
                    if (i + x.size() <= r.size() && r.substr(i, x.size()) == x)
                        reach[i + x.size()] = 1;
            }
            throw factorization_inconsistency(pos + stall);
        }
        if (viable == 1 && !longer_possible) {
            out.tokens.push_back(*sole);
            pos += sole->size();
        } else {
            break;
        }
    }
    out.residual = word(prefix.substr(pos));
    out.committed = pos;
    return out;
}

}  // namespace palinforge

#endif
