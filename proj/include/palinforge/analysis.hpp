#ifndef PALINFORGE_ANALYSIS_HPP
#define PALINFORGE_ANALYSIS_HPP

#include "conservative.hpp"

namespace palinforge {

// Recurrence evidence for one factor inside a long generated prefix: the
// shortest palindromic prefix of the window containing the factor bounds
// the occurrence gaps, after adding room for two more tokens.
struct recurrence_check {
    word factor;
    std::size_t container_len = 0;   // shortest palindromic prefix containing the factor
    std::size_t count = 0;           // occurrences inside the window
    std::size_t max_gap = 0;         // largest start-to-start difference
    std::size_t bound = 0;           // container_len + 2 * longest token
    bool within = false;
};

inline recurrence_check recurrence_report(std::string_view window, std::string_view factor,
                                          std::size_t longest_token) {
    recurrence_check out;
    out.factor = word(factor);
    auto occ = occurrence_gaps(factor, window);
    out.count = occ.positions.size();
    if (out.count < 2)
        throw std::invalid_argument("recurrence_report: factor must occur at least twice");
    for (std::size_t g : occ.gaps) out.max_gap = std::max(out.max_gap, g);
    bool found = false;
    for (std::size_t len = factor.size(); len <= window.size(); ++len) {
        std::string_view head = window.substr(0, len);
        if (!is_palindrome(head)) continue;
        if (head.find(factor) != std::string_view::npos) {
            out.container_len = len;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument(
            "recurrence_report: no palindromic prefix of the window contains the factor");
    out.bound = out.container_len + 2 * longest_token;
    out.within = out.max_gap <= out.bound;
    return out;
}

// Highest powers, inside a window, of the proper prefixes of code elements
// (and their reversals) that are not elements themselves. An entry is
// saturated when the next power would not fit in the window, leaving the
// exponent inconclusive rather than maximal.
struct power_entry {
    word base;
    std::size_t max_power = 0;
    bool saturated = false;
};

struct power_report {
    std::vector<power_entry> entries;   // sorted by base
    std::size_t exponent = 1;           // 1 + the largest power seen
    bool any_saturated = false;
};

inline power_report power_free_report(std::string_view window, const code& X) {
    std::set<word> bases;
    for (const auto& x : X.words)
        for (std::size_t k = 1; k < x.size(); ++k) {
            word u = x.substr(0, k);
            if (!X.contains(u)) {
                bases.insert(reversed(u));
                bases.insert(std::move(u));
            }
        }
    power_report out;
    for (const auto& u : bases) {
        power_entry e;
        e.base = u;
        word pw = u;
        while (pw.size() <= window.size() && window.find(pw) != std::string_view::npos) {
            ++e.max_power;
            pw += u;
        }
        e.saturated = e.max_power > 0 && (e.max_power + 1) * u.size() > window.size();
        out.exponent = std::max(out.exponent, e.max_power + 1);
        out.any_saturated = out.any_saturated || e.saturated;
        out.entries.push_back(std::move(e));
    }
    return out;
}

// Factor-count certificates for the limit word of a letter-recurrent
// directive over a maximal prefix code, measured on a generated prefix:
//   - sr[n]: length-n factors with the full set of right extensions;
//   - lower_ok_from: least n' <= n_lo from which sr stays at least the
//     proper-prefix count of X through n_hi;
//   - slope: p(n) >= p(n_lo) + (|X| - 1)(n - n_lo) across the window;
//   - upper_ok: p(n) <= 2 |X| n - |X| from the first full prefix length on;
//   - gap_bound_ok: sampled repeated factors recur within their palindromic
//     container plus two tokens;
//   - exponent: empirical power bound for prefix-of-element bases.
struct growth_report {
    std::size_t prefix_len = 0;
    std::size_t alphabet_size = 0;
    std::size_t code_size = 0;
    std::size_t lambda = 0;        // proper-prefix count, empty word included
    std::size_t n0 = 0;            // length of the image of the least full prefix
    std::size_t n_lo = 0, n_hi = 0;
    std::vector<std::size_t> p;    // p[0 .. n_hi]
    std::vector<std::size_t> sr;   // sr[0 .. n_hi], order-exactly-d right specials
    std::optional<std::size_t> lower_ok_from;
    long long slope_offset = 0;    // p(n_lo) - (|X| - 1) n_lo
    bool slope_ok = false;
    bool upper_ok = false;
    bool strictly_increasing = false;
    bool balance_ok = false;       // extension bookkeeping of the profile
    std::size_t exponent = 1;
    bool power_saturated = false;
    bool gap_bound_ok = false;
};

inline growth_report xar_bounds_report(const code& X, const directive_stream& d,
                                       std::size_t prefix_len, std::size_t n_lo,
                                       std::size_t n_hi) {
    if (n_lo == 0 || n_lo > n_hi)
        throw std::invalid_argument("xar_bounds_report: need 1 <= n_lo <= n_hi");
    if (prefix_len < 4 * n_hi)
        throw std::invalid_argument(
            "xar_bounds_report: prefix must be at least four times the top length");
    if (!is_xar_directive(d))
        throw std::invalid_argument("xar_bounds_report: every element must recur in the period");

    growth_report rep;
    rep.prefix_len = prefix_len;
    rep.alphabet_size = X.alphabet.size();
    rep.code_size = X.words.size();
    rep.lambda = proper_prefix_count(X);
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;

    // least full prefix gives the onset of the upper bound
    std::vector<word> tokens;
    word image;
    for (std::size_t m = 1; m <= 64 && rep.n0 == 0; ++m) {
        tokens.push_back(d.token(m - 1));
        auto full = is_full(tokens, X);
        if (full.full) rep.n0 = psi_x(tokens, X).size();
    }
    if (rep.n0 == 0)
        throw std::runtime_error("xar_bounds_report: no full prefix within the token budget");

    word s = psi_stream(d, prefix_len);
    auto profile = complexity_profile(s, n_hi + 1);
    rep.balance_ok = profile.extension_balance_holds();
    rep.p.assign(profile.p.begin(), profile.p.begin() + static_cast<long>(n_hi) + 1);
    const std::size_t dsize = profile.alphabet.size();
    rep.sr.assign(n_hi + 1, 0);
    for (std::size_t n = 0; n <= n_hi; ++n) rep.sr[n] = profile.right[n][dsize];

    // lower certificate: sr >= lambda on a run reaching n_hi
    bool run_ok = true;
    for (std::size_t n = n_hi + 1; n-- > 1;) {
        if (rep.sr[n] < rep.lambda) run_ok = false;
        if (run_ok && n <= n_lo) rep.lower_ok_from = n;
        if (!run_ok && n <= n_lo) break;
    }

    rep.slope_offset = static_cast<long long>(rep.p[n_lo]) -
                       static_cast<long long>((rep.code_size - 1) * n_lo);
    rep.slope_ok = true;
    for (std::size_t n = n_lo; n <= n_hi; ++n)
        if (static_cast<long long>(rep.p[n]) <
            static_cast<long long>((rep.code_size - 1) * n) + rep.slope_offset)
            rep.slope_ok = false;

    rep.upper_ok = true;
    for (std::size_t n = std::max<std::size_t>(rep.n0, 1); n <= n_hi; ++n)
        if (rep.p[n] > 2 * rep.code_size * n - rep.code_size) rep.upper_ok = false;

    rep.strictly_increasing = true;
    for (std::size_t n = 1; n < n_hi; ++n)
        if (rep.p[n] >= rep.p[n + 1]) rep.strictly_increasing = false;

    auto powers = power_free_report(s, X);
    rep.exponent = powers.exponent;
    rep.power_saturated = powers.any_saturated;

    // sample the first distinct factors of token-plus-one length and check
    // their occurrence gaps against the palindromic-container bound
    const std::size_t flen = X.ell() + 1;
    std::set<std::string_view> seen;
    rep.gap_bound_ok = true;
    for (std::size_t i = 0; i + flen <= s.size() && seen.size() < 20; ++i) {
        std::string_view u = std::string_view(s).substr(i, flen);
        if (!seen.insert(u).second) continue;
        try {
            auto rc = recurrence_report(s, u, X.ell());
            if (!rc.within) rep.gap_bound_ok = false;
        } catch (const std::invalid_argument&) {
            rep.gap_bound_ok = false;
        }
    }
    return rep;
}

}  // namespace palinforge

#endif
