#ifndef PALINFORGE_REPORTS_HPP
#define PALINFORGE_REPORTS_HPP

#include <json.hpp>

#include <sstream>

#include "analysis.hpp"

namespace palinforge {

using ordered_json = nlohmann::ordered_json;

inline const char* conservativity_name(conservativity k) {
    switch (k) {
        case conservativity::proved: return "proved-conservative";
        case conservativity::refuted: return "not-conservative";
        case conservativity::bounded: return "conservative-up-to";
    }
    return "?";
}

inline ordered_json to_json(const code& X) {
    return ordered_json(X.words);
}

inline ordered_json to_json(const code_class& c) {
    ordered_json j;
    j["is_code"] = c.is_code;
    if (c.ambiguous_word) j["ambiguous_word"] = *c.ambiguous_word;
    j["prefix"] = c.prefix;
    j["suffix"] = c.suffix;
    j["bifix"] = c.bifix;
    j["infix"] = c.infix;
    j["weakly_overlap_free"] = c.weakly_overlap_free;
    j["maximal_prefix"] = c.maximal_prefix;
    if (c.lambda) j["lambda"] = *c.lambda;
    return j;
}

inline ordered_json to_json(const delay_result& r) {
    ordered_json j;
    switch (r.kind) {
        case delay_result::kind_t::finite:
            j["kind"] = "finite";
            j["value"] = r.value;
            break;
        case delay_result::kind_t::at_least:
            j["kind"] = "at-least";
            j["value"] = r.value;
            break;
        case delay_result::kind_t::infinite:
            j["kind"] = "infinite";
            break;
    }
    j["reason"] = r.reason;
    return j;
}

inline ordered_json to_json(const stream_factorization& f) {
    ordered_json j;
    j["tokens"] = f.tokens;
    j["residual"] = f.residual;
    j["committed"] = f.committed;
    return j;
}

inline ordered_json to_json(const fullness_report& r) {
    ordered_json j;
    j["full"] = r.full;
    if (!r.full) j["failed"] = r.failed;
    ordered_json last = ordered_json::object();
    for (const auto& [x, i] : r.last) last[x] = i;
    j["last_occurrence"] = last;
    return j;
}

inline ordered_json to_json(const conservativity_verdict& v) {
    ordered_json j;
    j["kind"] = conservativity_name(v.kind);
    j["depth"] = v.depth;
    if (v.kind == conservativity::proved) j["rule"] = v.rule;
    if (v.kind == conservativity::refuted) {
        j["witness"] = v.witness;
        j["image"] = v.image;
    }
    return j;
}

inline ordered_json to_json(const morphic_verdict& v) {
    ordered_json j;
    j["kind"] = conservativity_name(v.kind);
    j["depth"] = v.depth;
    if (v.witness) {
        j["witness"] = *v.witness;
        j["lhs"] = v.lhs;
        j["rhs"] = v.rhs;
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["image_palindromic"] = v.image_palindromic;
    j["image_prefix"] = v.image_prefix;
    j["image_conservativity"] = to_json(v.image_conservativity);
    return j;
}

inline ordered_json to_json(const weak_conservativity_report& r) {
    ordered_json j;
    j["consistent"] = r.consistent;
    j["delay_used"] = r.delay_used;
    if (r.consistent) {
        j["tokens"] = r.tokens;
        j["tail"] = r.tail;
        j["covered"] = r.covered;
    } else {
        j["inconsistent_at"] = *r.inconsistent_at;
    }
    return j;
}

inline ordered_json to_json(const morphism& m) {
    ordered_json j = ordered_json::object();
    for (const auto& [letter, image] : m.images) j[std::string(1, letter)] = image;
    return j;
}

inline ordered_json to_json(const morphic_image_report& r) {
    ordered_json j;
    j["z"] = r.z;
    j["full_at"] = r.full_at;
    j["mu"] = to_json(r.mu);
    j["phi"] = to_json(r.phi);
    j["prefix"] = r.prefix;
    j["digit_word"] = r.digit_word;
    j["reconstruction_ok"] = r.reconstruction_ok;
    return j;
}

inline ordered_json to_json(const recurrence_check& r) {
    ordered_json j;
    j["factor"] = r.factor;
    j["count"] = r.count;
    j["max_gap"] = r.max_gap;
    j["container_len"] = r.container_len;
    j["bound"] = r.bound;
    j["within"] = r.within;
    return j;
}

inline ordered_json to_json(const power_report& r) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json je;
        je["base"] = e.base;
        je["max_power"] = e.max_power;
        je["saturated"] = e.saturated;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["exponent"] = r.exponent;
    j["any_saturated"] = r.any_saturated;
    return j;
}

inline ordered_json to_json(const factor_profile& p) {
    ordered_json j;
    j["alphabet"] = p.alphabet;
    j["horizon"] = p.horizon;
    j["p"] = p.p;
    j["right"] = p.right;
    return j;
}

inline ordered_json to_json(const growth_report& r) {
    ordered_json j;
    j["prefix_len"] = r.prefix_len;
    j["alphabet_size"] = r.alphabet_size;
    j["code_size"] = r.code_size;
    j["lambda"] = r.lambda;
    j["n0"] = r.n0;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["p"] = r.p;
    j["sr"] = r.sr;
    if (r.lower_ok_from) j["lower_ok_from"] = *r.lower_ok_from;
    else j["lower_ok_from"] = nullptr;
    j["slope_offset"] = r.slope_offset;
    j["slope_ok"] = r.slope_ok;
    j["upper_ok"] = r.upper_ok;
    j["strictly_increasing"] = r.strictly_increasing;
    j["balance_ok"] = r.balance_ok;
    j["exponent"] = r.exponent;
    j["power_saturated"] = r.power_saturated;
    j["gap_bound_ok"] = r.gap_bound_ok;
    return j;
}

// CSV rows n,p(n) for a profile table.
inline std::string profile_csv(const factor_profile& p) {
    std::ostringstream out;
    out << "n,p\n";
    for (std::size_t n = 0; n < p.p.size(); ++n) out << n << ',' << p.p[n] << '\n';
    return out.str();
}

// CSV rows n,p(n),sr(n) over the report window.
inline std::string growth_csv(const growth_report& r) {
    std::ostringstream out;
    out << "n,p,sr\n";
    for (std::size_t n = 0; n <= r.n_hi; ++n) out << n << ',' << r.p[n] << ',' << r.sr[n] << '\n';
    return out.str();
}

}  // namespace palinforge

#endif
