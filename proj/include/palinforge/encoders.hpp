#ifndef PALINFORGE_ENCODERS_HPP
#define PALINFORGE_ENCODERS_HPP

#include "psi.hpp"

namespace palinforge {

// The letter exchange on {a, b}, extended to words.
inline word exchanged_ab(std::string_view w) {
    word out(w);
    for (char& c : out) {
        if (c == 'a') c = 'b';
        else if (c == 'b') c = 'a';
        else throw std::invalid_argument(std::string("exchanged_ab: letter outside {a,b}: ") + c);
    }
    return out;
}

namespace detail {

inline void require_binary_nonunary(std::string_view directive, const char* who) {
    if (directive.empty()) throw std::invalid_argument(std::string(who) + ": empty directive");
    bool has_a = false, has_b = false;
    for (char c : directive) {
        if (c == 'a') has_a = true;
        else if (c == 'b') has_b = true;
        else throw std::invalid_argument(std::string(who) + ": alphabet is {a,b}");
    }
    if (!has_a || !has_b)
        throw std::invalid_argument(std::string(who) + ": directive must use both letters");
}

}  // namespace detail

// Rewrites a two-letter directive into tokens over {aa, ab, ba, bb} whose
// token palindromization equals the letter palindromization of the
// directive. For a directive a^n b u: n even gives (aa)^(n/2) then ba,
// n odd gives (aa)^((n-1)/2) then ab; each later letter z contributes the
// token z z-bar. Directives starting with b go through the letter exchange
// on both ends.
inline std::vector<word> sturmian_encode(std::string_view directive) {
    detail::require_binary_nonunary(directive, "sturmian_encode");
    if (directive[0] == 'b') {
        auto tokens = sturmian_encode(exchanged_ab(directive));
        for (auto& t : tokens) t = exchanged_ab(t);
        return tokens;
    }
    std::size_t n = 0;
    while (n < directive.size() && directive[n] == 'a') ++n;
    // directive[n] == 'b' since both letters occur
    std::vector<word> tokens;
    for (std::size_t i = 0; i < n / 2; ++i) tokens.emplace_back("aa");
    tokens.emplace_back(n % 2 ? "ab" : "ba");
    for (std::size_t i = n + 1; i < directive.size(); ++i)
        tokens.emplace_back(directive[i] == 'a' ? "ab" : "ba");
    return tokens;
}

// Inverse of sturmian_encode on its image. The leading run of doubled
// letters and the pivot token determine the initial run length; every later
// token spells its first letter.
inline word sturmian_decode(const std::vector<word>& tokens) {
    if (tokens.empty()) throw std::invalid_argument("sturmian_decode: empty token list");
    for (const auto& t : tokens)
        if (t != "aa" && t != "ab" && t != "ba" && t != "bb")
            throw std::invalid_argument("sturmian_decode: token outside {aa,ab,ba,bb}: " + t);
    if (tokens[0] == "bb" || tokens[0] == "ba") {
        std::vector<word> flipped(tokens);
        for (auto& t : flipped) t = exchanged_ab(t);
        return exchanged_ab(sturmian_decode(flipped));
    }
    std::size_t k = 0;
    while (k < tokens.size() && tokens[k] == "aa") ++k;
    if (k == tokens.size())
        throw std::invalid_argument("sturmian_decode: missing pivot token after the aa run");
    std::size_t n;
    if (tokens[k] == "ab") {
        n = 2 * k + 1;
    } else if (tokens[k] == "ba" && k > 0) {
        n = 2 * k;
    } else {
        throw std::invalid_argument("sturmian_decode: invalid pivot token " + tokens[k]);
    }
    word directive(n, 'a');
    directive.push_back('b');
    for (std::size_t i = k + 1; i < tokens.size(); ++i) {
        if (tokens[i] == "ab") directive.push_back('a');
        else if (tokens[i] == "ba") directive.push_back('b');
        else throw std::invalid_argument("sturmian_decode: invalid step token " + tokens[i]);
    }
    return directive;
}

// Token scheme whose palindromization reproduces the doubling-morphism
// orbit of a: with u_0 = a and v_i the letter exchange of u_i followed by b,
// each u_{i+1} = (u_i v_i)^+. Returns [a, v_0, .., v_{n-1}]; the token
// palindromization of the list equals the 2n-th image of a under
// a -> ab, b -> ba.
inline std::vector<word> thue_morse_tokens(std::size_t n) {
    std::vector<word> tokens{"a"};
    word u = "a";
    for (std::size_t i = 0; i < n; ++i) {
        word v = exchanged_ab(u) + "b";
        tokens.push_back(v);
        u = pal_closure(u + v);
    }
    return tokens;
}

}  // namespace palinforge

#endif
