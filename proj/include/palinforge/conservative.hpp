#ifndef PALINFORGE_CONSERVATIVE_HPP
#define PALINFORGE_CONSERVATIVE_HPP

#include "theta.hpp"

namespace palinforge {

enum class conservativity { proved, refuted, bounded };

// Conservativity of token palindromization over X: every image of a token
// sequence stays inside X^*. A sufficient structural condition proves it
// outright; otherwise token sequences are enumerated by count, then
// lexicographically by the sorted token order, up to the given depth, and
// the first image falling outside X^* refutes.
struct conservativity_verdict {
    conservativity kind = conservativity::bounded;
    std::size_t depth = 0;          // sequences up to this many tokens were checked
    std::string rule;               // proved: the structural condition that fired
    std::vector<word> witness;      // refuted: first offending token sequence
    word image;                     // refuted: its palindromization
};

inline bool all_palindromes(const code& X) {
    for (const auto& x : X.words)
        if (!is_palindrome(x)) return false;
    return true;
}

inline conservativity_verdict is_conservative(const code& X, std::size_t depth = 4) {
    conservativity_verdict out;
    out.depth = depth;
    if (all_palindromes(X) && is_infix_code(X) && is_weakly_overlap_free(X)) {
        out.kind = conservativity::proved;
        out.rule = "palindromic infix weakly-overlap-free code";
        return out;
    }
    std::vector<std::size_t> idx;
    std::vector<word> tokens;
    for (std::size_t count = 1; count <= depth; ++count) {
        idx.assign(count, 0);
        for (;;) {
            tokens.clear();
            for (std::size_t i : idx) tokens.push_back(X.words[i]);
            word image = psi_x(tokens, X);
            if (!in_star(image, X)) {
                out.kind = conservativity::refuted;
                out.witness = tokens;
                out.image = std::move(image);
                return out;
            }
            std::size_t pos = count;
            while (pos > 0 && idx[pos - 1] + 1 == X.words.size()) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    out.kind = conservativity::bounded;
    return out;
}

// Morphic conservativity of a letter-injective morphism phi: the letter
// palindromization of any w, pushed through phi, equals the token
// palindromization of phi(w) over the image code. Exactly the morphisms
// whose image is a prefix code of palindromes with conservative token
// palindromization have this property, so a structural failure refutes
// without a finite witness, a proved image conservativity proves, and
// otherwise the direct identity is searched up to the depth.
struct morphic_verdict {
    conservativity kind = conservativity::bounded;
    std::size_t depth = 0;
    std::optional<word> witness;  // letter word where the identity fails
    word lhs, rhs;                // the two sides at the witness
    std::string reason;           // refuted without witness: which structure failed
    bool image_palindromic = false;
    bool image_prefix = false;
    conservativity_verdict image_conservativity;
};

inline morphic_verdict is_morphic_conservative(const morphism& phi, std::size_t depth = 4) {
    if (phi.images.empty())
        throw std::invalid_argument("is_morphic_conservative: empty domain");
    if (!phi.letter_injective())
        throw std::invalid_argument("is_morphic_conservative: images must be distinct");
    std::vector<word> images;
    for (const auto& [letter, x] : phi.images) {
        (void)letter;
        if (x.empty())
            throw std::invalid_argument("is_morphic_conservative: erasing morphism");
        images.push_back(x);
    }
    code X(images);
    morphic_verdict out;
    out.depth = depth;
    out.image_palindromic = all_palindromes(X);
    out.image_prefix = is_prefix_code(X);
    out.image_conservativity = is_conservative(X, depth);

    // direct search over letter words, by length then lexicographically
    std::string domain = phi.domain();
    std::vector<std::size_t> idx;
    for (std::size_t len = 1; len <= depth; ++len) {
        idx.assign(len, 0);
        for (;;) {
            word w;
            for (std::size_t i : idx) w.push_back(domain[i]);
            word lhs = phi.apply(psi(w));
            std::vector<word> tokens;
            for (char b : w) tokens.push_back(phi.images.at(b));
            word rhs = psi_x(tokens, X);
            if (lhs != rhs) {
                out.kind = conservativity::refuted;
                out.witness = w;
                out.lhs = std::move(lhs);
                out.rhs = std::move(rhs);
                return out;
            }
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == domain.size()) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    if (!out.image_palindromic || !out.image_prefix ||
        out.image_conservativity.kind == conservativity::refuted) {
        out.kind = conservativity::refuted;
        out.reason = !out.image_palindromic  ? "image contains a non-palindrome"
                     : !out.image_prefix     ? "image is not a prefix code"
                                             : "image palindromization leaves the star";
        return out;
    }
    if (out.image_conservativity.kind == conservativity::proved) {
        out.kind = conservativity::proved;
        return out;
    }
    out.kind = conservativity::bounded;
    return out;
}

// Weak conservativity probe: generate a prefix of the stream's limit word
// and run the incremental factorization over X at the code's deciphering
// delay. A consistent run returns the committed tokens and the short
// uncommitted tail; an inconsistency pinpoints the offset where no token
// fits.
struct weak_conservativity_report {
    bool consistent = false;
    std::vector<word> tokens;
    word tail;
    std::size_t covered = 0;
    std::optional<std::size_t> inconsistent_at;
    std::size_t delay_used = 0;
};

inline weak_conservativity_report weak_conservativity_witness(const code& X,
                                                              const directive_stream& d,
                                                              std::size_t target_len) {
    weak_conservativity_report rep;
    if (is_prefix_code(X)) {
        rep.delay_used = 0;
    } else {
        auto delay = deciphering_delay(X);
        if (delay.kind != delay_result::kind_t::finite)
            throw std::invalid_argument(
                "weak_conservativity_witness: code has no usable finite deciphering delay");
        rep.delay_used = delay.value;
    }
    word s = psi_stream(d, target_len);
    try {
        auto fs = factorize_stream(s, X, rep.delay_used);
        rep.consistent = true;
        rep.tokens = std::move(fs.tokens);
        rep.tail = std::move(fs.residual);
        rep.covered = fs.committed;
    } catch (const factorization_inconsistency& e) {
        rep.consistent = false;
        rep.inconsistent_at = e.position;
    }
    return rep;
}

// Morphic image data of a letter-recurrent directive over a maximal prefix
// code: the least full token prefix z, a fresh digit letter per token in
// order of first appearance in the stream, the induced morphism, and a
// step-by-step verification that continuing past z equals pushing the digit
// palindromization through that morphism.
struct morphic_image_report {
    std::vector<word> z;          // least full directive prefix
    std::size_t full_at = 0;      // = z.size()
    morphism mu;                  // digit -> token, digits by first token appearance
    morphism phi;                 // digit -> block of the image
    word prefix;                  // generated image prefix (target_len letters)
    word digit_word;              // digits of the committed tokenization of prefix
    bool reconstruction_ok = false;
};

inline morphic_image_report xar_morphic_image(const code& X, const directive_stream& d,
                                              std::size_t target_len,
                                              std::string_view digit_alphabet = "0123456789",
                                              std::size_t token_budget = 64) {
    if (!d.is_periodic())
        throw std::invalid_argument("xar_morphic_image: stream must be eventually periodic");
    if (!is_xar_directive(d))
        throw std::invalid_argument("xar_morphic_image: every element must recur in the period");
    if (digit_alphabet.size() < X.words.size())
        throw std::invalid_argument("xar_morphic_image: digit alphabet smaller than the code");
    if (alphabet_of(digit_alphabet).size() != digit_alphabet.size())
        throw std::invalid_argument("xar_morphic_image: digit alphabet has repeats");
    morphic_image_report rep;
    std::vector<word> tokens;
    for (std::size_t m = 1; m <= token_budget; ++m) {
        tokens.push_back(d.token(m - 1));
        auto full = is_full(tokens, X);
        if (full.full) {
            rep.z = tokens;
            rep.full_at = m;
            break;
        }
    }
    if (rep.z.empty())
        throw std::runtime_error("xar_morphic_image: no full prefix within the token budget");

    std::map<word, char> digit_of;
    for (std::size_t i = 0, next = 0; digit_of.size() < X.words.size(); ++i) {
        word x = d.token(i);
        if (digit_of.emplace(x, digit_alphabet[next]).second) {
            rep.mu.images[digit_alphabet[next]] = x;
            ++next;
        }
    }
    rep.phi = phi_z(rep.z, X, rep.mu);

    // continue past z, tracking the digit palindromization alongside
    word P = psi_x(rep.z, X);
    const word P_z = P;
    word digit_psi;
    rep.reconstruction_ok = true;
    for (std::size_t k = rep.z.size(); P.size() < target_len; ++k) {
        word x = d.token(k);
        P = justin_step(P, x);
        digit_psi.push_back(digit_of.at(x));
        digit_psi = pal_closure(digit_psi);
        if (rep.phi.apply(digit_psi) + P_z != P) rep.reconstruction_ok = false;
    }
    rep.prefix = P.substr(0, target_len);

    auto fs = factorize_stream(rep.prefix, X, 0);
    for (const auto& x : fs.tokens) rep.digit_word.push_back(digit_of.at(x));
    return rep;
}

}  // namespace palinforge

#endif
