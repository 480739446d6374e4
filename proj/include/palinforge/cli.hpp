#ifndef PALINFORGE_CLI_HPP
#define PALINFORGE_CLI_HPP

#include <CLI11.hpp>

#include <iostream>

#include "encoders.hpp"
#include "reports.hpp"

namespace palinforge {
namespace cli {

// Flag values that do not parse are usage errors (exit 64), unlike domain
// failures inside the library (exit 2).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<word> split_csv(const std::string& s) {
    std::vector<word> out;
    if (s.empty()) return out;
    word cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string join_csv(const std::vector<word>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out.push_back(',');
        out += ws[i];
    }
    return out;
}

// Grammar "a<->b,c": comma-separated segments, each either a pair x<->y or
// a single fixed letter. The empty string is plain reversal.
inline antimorphism parse_theta(const std::string& spec) {
    std::vector<std::pair<char, char>> pairs;
    for (const auto& seg : split_csv(spec)) {
        if (seg.size() == 1) {
            pairs.emplace_back(seg[0], seg[0]);
        } else if (seg.size() == 5 && seg.substr(1, 3) == "<->") {
            pairs.emplace_back(seg[0], seg[4]);
        } else {
            throw usage_error("--theta: expected segments like a<->b or c, got: " + seg);
        }
    }
    try {
        return antimorphism::from_pairs(pairs);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

// Grammar "a=aa,b=ab": comma-separated letter=image entries.
inline morphism parse_morphism(const std::string& spec) {
    morphism m;
    for (const auto& seg : split_csv(spec)) {
        if (seg.size() < 3 || seg[1] != '=')
            throw usage_error("expected letter=image entries, got: " + seg);
        if (m.images.count(seg[0]))
            throw usage_error(std::string("repeated letter in morphism: ") + seg[0]);
        m.images[seg[0]] = seg.substr(2);
    }
    if (m.images.empty()) throw usage_error("empty morphism");
    return m;
}

// Grammar "lo..hi".
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw usage_error("--n-range: expected lo..hi, got: " + s);
    try {
        std::size_t lo = std::stoul(s.substr(0, dots));
        std::size_t hi = std::stoul(s.substr(dots + 2));
        if (lo > hi) throw usage_error("--n-range: lo exceeds hi in " + s);
        return {lo, hi};
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("--n-range: expected lo..hi, got: " + s);
    }
}

inline code parse_code(const std::string& csv) {
    if (csv.empty()) throw usage_error("--code is required here");
    return code(split_csv(csv));
}

inline const char* bool_name(bool b) { return b ? "true" : "false"; }

struct options {
    std::string code_csv, tokens_csv, preamble_csv, period_csv;
    std::string letters, invert, extend, mu_spec, phi_spec, theta_spec;
    std::string close_word, mu_word, input_word, factor, block, decode_csv;
    std::string report = "bounds", format = "plain", n_range, side = "right";
    std::string digits = "0123456789";
    std::size_t length = 200, prefix_len = 200, depth = 4, k_max = 4, budget = 64;
    std::size_t tm_n = 3, special_n = 1;
    long long delay = -1;
    bool json = false, full = false, stream_mode = false, weak = false, image = false;
};

inline directive_stream make_stream(const options& o) {
    code X = parse_code(o.code_csv);
    if (o.period_csv.empty())
        throw usage_error("--period is required for stream generation");
    return directive_stream::periodic(X, split_csv(o.preamble_csv), split_csv(o.period_csv));
}

inline int run_generate(const options& o, std::ostream& out) {
    if (!o.invert.empty()) {
        auto v = inverse_psi(o.invert);
        if (!v)
            throw std::invalid_argument("word is not a letter palindromization image");
        if (o.json) out << ordered_json{{"directive", *v}} << "\n";
        else out << *v << "\n";
        return 0;
    }
    if (!o.letters.empty()) {
        word p = psi(o.letters);
        if (o.json) out << ordered_json{{"word", p}} << "\n";
        else out << p << "\n";
        return 0;
    }
    if (!o.extend.empty()) {
        code X = parse_code(o.code_csv);
        if (o.tokens_csv.empty() || o.mu_spec.empty())
            throw usage_error("--extend needs --code, --tokens and --mu");
        auto id = justin_general(split_csv(o.tokens_csv), o.extend, X, parse_morphism(o.mu_spec));
        if (o.json) {
            ordered_json j;
            j["continued"] = id.continued;
            j["reconstructed"] = id.reconstructed;
            j["equal"] = id.equal;
            out << j << "\n";
        } else {
            out << "continued=" << id.continued << "\n";
            out << "reconstructed=" << id.reconstructed << "\n";
            out << "equal=" << bool_name(id.equal) << "\n";
        }
        return 0;
    }
    if (!o.tokens_csv.empty()) {
        code X = parse_code(o.code_csv);
        auto tokens = split_csv(o.tokens_csv);
        if (o.full) {
            auto rep = is_full(tokens, X);
            if (o.json) {
                out << to_json(rep) << "\n";
            } else {
                out << "full=" << bool_name(rep.full) << "\n";
                if (!rep.full) out << "failed=" << rep.failed << "\n";
                for (const auto& [x, i] : rep.last) out << "last[" << x << "]=" << i << "\n";
            }
            return 0;
        }
        word p = psi_x(tokens, X);
        if (o.json) out << ordered_json{{"word", p}} << "\n";
        else out << p << "\n";
        return 0;
    }
    if (!o.period_csv.empty()) {
        word p = psi_stream(make_stream(o), o.length);
        if (o.json) out << ordered_json{{"word", p}} << "\n";
        else out << p << "\n";
        return 0;
    }
    throw usage_error("generate needs --letters, --tokens, --period, --invert or --extend");
}

inline int run_factorize(const options& o, std::ostream& out) {
    code X = parse_code(o.code_csv);
    if (o.input_word.empty()) throw usage_error("factorize needs --word");
    if (o.stream_mode) {
        std::size_t delay;
        if (o.delay >= 0) {
            delay = static_cast<std::size_t>(o.delay);
        } else if (is_prefix_code(X)) {
            delay = 0;
        } else {
            auto d = deciphering_delay(X, o.k_max);
            if (d.kind != delay_result::kind_t::finite)
                throw std::invalid_argument("code has no usable finite deciphering delay");
            delay = d.value;
        }
        auto fs = factorize_stream(o.input_word, X, delay);
        if (o.json) {
            out << to_json(fs) << "\n";
        } else {
            out << "tokens=" << join_csv(fs.tokens) << "\n";
            out << "residual=" << fs.residual << "\n";
            out << "committed=" << fs.committed << "\n";
        }
        return 0;
    }
    auto tokens = factorize(o.input_word, X);
    if (!tokens) throw std::invalid_argument("word is not in the star of the code");
    if (o.json) out << ordered_json{{"tokens", *tokens}} << "\n";
    else out << join_csv(*tokens) << "\n";
    return 0;
}

inline int run_check_code(const options& o, std::ostream& out) {
    code X = parse_code(o.code_csv);
    auto cls = classify(X);
    std::optional<delay_result> delay;
    if (cls.is_code) delay = deciphering_delay(X, o.k_max);
    if (o.json) {
        ordered_json j = to_json(cls);
        if (delay) j["delay"] = to_json(*delay);
        out << j << "\n";
        return 0;
    }
    out << "is_code=" << bool_name(cls.is_code) << "\n";
    if (cls.ambiguous_word) out << "witness=" << *cls.ambiguous_word << "\n";
    out << "prefix=" << bool_name(cls.prefix) << "\n";
    out << "suffix=" << bool_name(cls.suffix) << "\n";
    out << "bifix=" << bool_name(cls.bifix) << "\n";
    out << "infix=" << bool_name(cls.infix) << "\n";
    out << "weakly_overlap_free=" << bool_name(cls.weakly_overlap_free) << "\n";
    out << "maximal_prefix=" << bool_name(cls.maximal_prefix) << "\n";
    if (cls.lambda) out << "lambda=" << *cls.lambda << "\n";
    if (delay) {
        out << "delay=";
        switch (delay->kind) {
            case delay_result::kind_t::finite: out << delay->value; break;
            case delay_result::kind_t::at_least: out << ">=" << delay->value; break;
            case delay_result::kind_t::infinite: out << "infinite"; break;
        }
        out << "\n";
    }
    return 0;
}

inline int run_check_conservative(const options& o, std::ostream& out) {
    if (!o.phi_spec.empty()) {
        auto v = is_morphic_conservative(parse_morphism(o.phi_spec), o.depth);
        if (o.json) {
            out << to_json(v) << "\n";
            return 0;
        }
        out << "kind=" << conservativity_name(v.kind) << "\n";
        out << "depth=" << v.depth << "\n";
        if (v.witness) {
            out << "witness=" << *v.witness << "\n";
            out << "lhs=" << v.lhs << "\n";
            out << "rhs=" << v.rhs << "\n";
        }
        if (!v.reason.empty()) out << "reason=" << v.reason << "\n";
        out << "image_palindromic=" << bool_name(v.image_palindromic) << "\n";
        out << "image_prefix=" << bool_name(v.image_prefix) << "\n";
        out << "image_conservativity=" << conservativity_name(v.image_conservativity.kind) << "\n";
        return 0;
    }
    if (o.weak) {
        auto rep = weak_conservativity_witness(parse_code(o.code_csv), make_stream(o), o.length);
        if (o.json) {
            out << to_json(rep) << "\n";
            return 0;
        }
        out << "consistent=" << bool_name(rep.consistent) << "\n";
        out << "delay_used=" << rep.delay_used << "\n";
        if (rep.consistent) {
            out << "token_count=" << rep.tokens.size() << "\n";
            out << "covered=" << rep.covered << "\n";
            out << "tail=" << rep.tail << "\n";
        } else {
            out << "inconsistent_at=" << *rep.inconsistent_at << "\n";
        }
        return 0;
    }
    if (o.image) {
        auto rep = xar_morphic_image(parse_code(o.code_csv), make_stream(o), o.length, o.digits,
                                     o.budget);
        if (o.json) {
            out << to_json(rep) << "\n";
            return 0;
        }
        out << "z=" << join_csv(rep.z) << "\n";
        out << "full_at=" << rep.full_at << "\n";
        for (const auto& [b, x] : rep.mu.images) out << "mu[" << b << "]=" << x << "\n";
        for (const auto& [b, w] : rep.phi.images) out << "phi[" << b << "]=" << w << "\n";
        out << "prefix=" << rep.prefix << "\n";
        out << "digit_word=" << rep.digit_word << "\n";
        out << "reconstruction_ok=" << bool_name(rep.reconstruction_ok) << "\n";
        return 0;
    }
    auto v = is_conservative(parse_code(o.code_csv), o.depth);
    if (o.json) {
        out << to_json(v) << "\n";
        return 0;
    }
    out << "kind=" << conservativity_name(v.kind) << "\n";
    out << "depth=" << v.depth << "\n";
    if (v.kind == conservativity::proved) out << "rule=" << v.rule << "\n";
    if (v.kind == conservativity::refuted) {
        out << "witness=" << join_csv(v.witness) << "\n";
        out << "image=" << v.image << "\n";
    }
    return 0;
}

inline int run_theta_generate(const options& o, std::ostream& out) {
    antimorphism th = parse_theta(o.theta_spec);
    word result;
    if (!o.close_word.empty()) {
        result = theta_closure(o.close_word, th);
    } else if (!o.mu_word.empty()) {
        result = mu_theta(th, alphabet_of(o.mu_word)).apply(o.mu_word);
    } else if (!o.letters.empty()) {
        result = psi_theta(o.letters, th);
    } else if (!o.tokens_csv.empty()) {
        result = psi_theta_x(split_csv(o.tokens_csv), parse_code(o.code_csv), th);
    } else {
        throw usage_error("theta-generate needs --close, --mu-of, --letters or --tokens");
    }
    if (o.json) out << ordered_json{{"word", result}} << "\n";
    else out << result << "\n";
    return 0;
}

inline int run_thue_morse(const options& o, std::ostream& out) {
    auto tokens = thue_morse_tokens(o.tm_n);
    code X(tokens);
    word image = psi_x(tokens, X);
    if (o.json) {
        ordered_json j;
        j["tokens"] = tokens;
        j["word"] = image;
        out << j << "\n";
        return 0;
    }
    out << "tokens=" << join_csv(tokens) << "\n";
    out << "word=" << image << "\n";
    return 0;
}

inline int run_sturmian(const options& o, std::ostream& out) {
    if (!o.decode_csv.empty()) {
        word directive = sturmian_decode(split_csv(o.decode_csv));
        if (o.json) out << ordered_json{{"directive", directive}} << "\n";
        else out << directive << "\n";
        return 0;
    }
    if (o.letters.empty()) throw usage_error("sturmian-encode needs --letters or --decode");
    auto tokens = sturmian_encode(o.letters);
    if (o.json) out << ordered_json{{"tokens", tokens}} << "\n";
    else out << join_csv(tokens) << "\n";
    return 0;
}

// Materialize the word a report runs on: an explicit --word, or a generated
// stream prefix of --prefix-len letters.
inline word analysis_input(const options& o) {
    if (!o.input_word.empty()) return o.input_word;
    if (!o.period_csv.empty()) return psi_stream(make_stream(o), o.prefix_len);
    throw usage_error("analyze needs --word or a stream (--code, --period)");
}

inline int run_analyze(const options& o, std::ostream& out) {
    if (o.format != "plain" && o.format != "json" && o.format != "csv")
        throw usage_error("--format must be plain, json or csv");
    const bool tabular = (o.report == "bounds" || o.report == "profile");
    if (o.format == "csv" && !tabular)
        throw std::invalid_argument("csv output is limited to tabular reports");

    if (o.report == "bounds") {
        if (o.n_range.empty()) throw usage_error("--n-range is required for bounds");
        auto [lo, hi] = parse_range(o.n_range);
        auto rep = xar_bounds_report(parse_code(o.code_csv), make_stream(o), o.prefix_len, lo, hi);
        if (o.format == "json") {
            out << to_json(rep) << "\n";
        } else if (o.format == "csv") {
            out << growth_csv(rep);
        } else {
            out << "prefix_len=" << rep.prefix_len << "\n";
            out << "lambda=" << rep.lambda << "\n";
            out << "n0=" << rep.n0 << "\n";
            out << "lower_ok_from=";
            if (rep.lower_ok_from) out << *rep.lower_ok_from;
            else out << "none";
            out << "\n";
            out << "slope_ok=" << bool_name(rep.slope_ok) << "\n";
            out << "upper_ok=" << bool_name(rep.upper_ok) << "\n";
            out << "strictly_increasing=" << bool_name(rep.strictly_increasing) << "\n";
            out << "balance_ok=" << bool_name(rep.balance_ok) << "\n";
            out << "exponent=" << rep.exponent << "\n";
            out << "gap_bound_ok=" << bool_name(rep.gap_bound_ok) << "\n";
        }
        return 0;
    }
    if (o.report == "profile") {
        word s = analysis_input(o);
        std::size_t hi = o.n_range.empty() ? std::min<std::size_t>(s.size(), 50)
                                           : parse_range(o.n_range).second;
        auto prof = complexity_profile(s, hi);
        if (o.format == "json") out << to_json(prof) << "\n";
        else out << profile_csv(prof);
        return 0;
    }
    if (o.report == "word") {
        if (o.input_word.empty()) throw usage_error("--word is required for the word report");
        const word& w = o.input_word;
        ordered_json j;
        j["lps"] = lps(w);
        j["closure"] = pal_closure(w);
        j["min_period"] = min_period(w);
        j["primitive"] = is_primitive(w);
        j["rich"] = is_rich(w);
        if (!o.block.empty()) {
            auto delta = delta_prefix(w, o.block);
            j["delta"] = delta ? ordered_json(*delta) : ordered_json(nullptr);
            j["step"] = justin_step(w, o.block);
        }
        if (o.format == "json") {
            out << j << "\n";
        } else {
            out << "lps=" << j["lps"].get<std::string>() << "\n";
            out << "closure=" << j["closure"].get<std::string>() << "\n";
            out << "min_period=" << j["min_period"] << "\n";
            out << "primitive=" << bool_name(j["primitive"].get<bool>()) << "\n";
            out << "rich=" << bool_name(j["rich"].get<bool>()) << "\n";
            if (!o.block.empty()) {
                out << "delta=" << (j["delta"].is_null() ? std::string("none")
                                                         : j["delta"].get<std::string>())
                    << "\n";
                out << "step=" << j["step"].get<std::string>() << "\n";
            }
        }
        return 0;
    }
    if (o.report == "recurrence") {
        if (o.factor.empty()) throw usage_error("--factor is required for recurrence");
        code X = parse_code(o.code_csv);
        auto rep = recurrence_report(analysis_input(o), o.factor, X.ell());
        if (o.format == "json") {
            out << to_json(rep) << "\n";
        } else {
            out << "count=" << rep.count << "\n";
            out << "max_gap=" << rep.max_gap << "\n";
            out << "container_len=" << rep.container_len << "\n";
            out << "bound=" << rep.bound << "\n";
            out << "within=" << bool_name(rep.within) << "\n";
        }
        return 0;
    }
    if (o.report == "power") {
        code X = parse_code(o.code_csv);
        auto rep = power_free_report(analysis_input(o), X);
        if (o.format == "json") {
            out << to_json(rep) << "\n";
        } else {
            for (const auto& e : rep.entries)
                out << "power[" << e.base << "]=" << e.max_power
                    << (e.saturated ? " (saturated)" : "") << "\n";
            out << "exponent=" << rep.exponent << "\n";
            out << "any_saturated=" << bool_name(rep.any_saturated) << "\n";
        }
        return 0;
    }
    if (o.report == "alternating") {
        auto d = make_stream(o);
        bool alt = is_alternating(d);
        std::optional<bool> xar;
        const code& X = d.tokens_code();
        if (is_prefix_code(X) && kraft_equality(X)) xar = is_xar_directive(d);
        if (o.format == "json") {
            ordered_json j;
            j["alternating"] = alt;
            j["letter_recurrent"] = xar ? ordered_json(*xar) : ordered_json(nullptr);
            out << j << "\n";
        } else {
            out << "alternating=" << bool_name(alt) << "\n";
            out << "letter_recurrent=" << (xar ? bool_name(*xar) : "not-applicable") << "\n";
        }
        return 0;
    }
    if (o.report == "special") {
        if (o.input_word.empty()) throw usage_error("--word is required for the special report");
        auto side = (o.side == "left") ? factor_side::left : factor_side::right;
        auto fs = special_factors(o.input_word, o.special_n, side);
        if (o.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& f : fs)
                arr.push_back({{"factor", f.factor}, {"extensions", f.extensions}});
            out << arr << "\n";
        } else {
            for (const auto& f : fs) out << f.factor << " " << f.extensions << "\n";
            out << "count=" << fs.size() << "\n";
        }
        return 0;
    }
    if (o.report == "gaps") {
        if (o.input_word.empty() || o.factor.empty())
            throw usage_error("the gaps report needs --word and --factor");
        auto occ = occurrence_gaps(o.factor, o.input_word);
        if (o.format == "json") {
            ordered_json j;
            j["positions"] = occ.positions;
            j["gaps"] = occ.gaps;
            out << j << "\n";
        } else {
            out << "positions=";
            for (std::size_t i = 0; i < occ.positions.size(); ++i)
                out << (i ? "," : "") << occ.positions[i];
            out << "\n";
            out << "gaps=";
            for (std::size_t i = 0; i < occ.gaps.size(); ++i) out << (i ? "," : "") << occ.gaps[i];
            out << "\n";
        }
        return 0;
    }
    throw usage_error("unknown report: " + o.report);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"palindromization toolkit over codes"};
    app.require_subcommand(1);
    options o;

    auto add_stream_flags = [&](CLI::App* cmd) {
        cmd->add_option("--code", o.code_csv, "comma-separated code words");
        cmd->add_option("--preamble", o.preamble_csv, "stream preamble tokens");
        cmd->add_option("--period", o.period_csv, "stream period tokens");
    };

    CLI::App* gen = app.add_subcommand("generate", "palindromization images");
    add_stream_flags(gen);
    gen->add_option("--letters", o.letters, "letter directive");
    gen->add_option("--tokens", o.tokens_csv, "finite token directive");
    gen->add_option("--length", o.length, "prefix length for streams");
    gen->add_option("--invert", o.invert, "recover the directive of an image");
    gen->add_option("--extend", o.extend, "letters continuing a full prefix");
    gen->add_option("--mu", o.mu_spec, "letter=token map for --extend");
    gen->add_flag("--full", o.full, "report fullness of --tokens instead of the image");
    gen->add_flag("--json", o.json, "JSON output");

    CLI::App* fac = app.add_subcommand("factorize", "token factorization");
    fac->add_option("--code", o.code_csv, "comma-separated code words")->required();
    fac->add_option("--word", o.input_word, "word to factorize")->required();
    fac->add_option("--delay", o.delay, "stream mode: override the deciphering delay");
    fac->add_option("--k-max", o.k_max, "delay search bound");
    fac->add_flag("--stream", o.stream_mode, "incremental mode with residual tail");
    fac->add_flag("--json", o.json, "JSON output");

    CLI::App* chk = app.add_subcommand("check-code", "code classification and delay");
    chk->add_option("--code", o.code_csv, "comma-separated code words")->required();
    chk->add_option("--k-max", o.k_max, "delay search bound");
    chk->add_flag("--json", o.json, "JSON output");

    CLI::App* con = app.add_subcommand("check-conservative", "conservativity verdicts");
    add_stream_flags(con);
    con->add_option("--depth", o.depth, "search depth");
    con->add_option("--phi", o.phi_spec, "letter=image morphism: morphic verdict");
    con->add_option("--length", o.length, "stream prefix length");
    con->add_option("--digits", o.digits, "digit alphabet for --image");
    con->add_option("--budget", o.budget, "token budget for the full-prefix scan");
    con->add_flag("--weak", o.weak, "factorize a generated prefix back through the code");
    con->add_flag("--image", o.image, "morphic image data of a letter-recurrent stream");
    con->add_flag("--json", o.json, "JSON output");

    CLI::App* tg = app.add_subcommand("theta-generate", "closure images under an antimorphism");
    tg->add_option("--theta", o.theta_spec, "involution, e.g. a<->b,c");
    tg->add_option("--letters", o.letters, "letter directive");
    tg->add_option("--code", o.code_csv, "comma-separated code words");
    tg->add_option("--tokens", o.tokens_csv, "finite token directive");
    tg->add_option("--close", o.close_word, "single closure of a word");
    tg->add_option("--mu-of", o.mu_word, "apply the letter-doubling morphism to a word");
    tg->add_flag("--json", o.json, "JSON output");

    CLI::App* ana = app.add_subcommand("analyze", "reports over words and streams");
    add_stream_flags(ana);
    ana->add_option("--report", o.report,
                    "bounds|profile|word|recurrence|power|alternating|special|gaps");
    ana->add_option("--format", o.format, "plain|json|csv");
    ana->add_option("--prefix-len", o.prefix_len, "generated prefix length");
    ana->add_option("--n-range", o.n_range, "factor lengths lo..hi");
    ana->add_option("--word", o.input_word, "explicit input word");
    ana->add_option("--factor", o.factor, "factor for recurrence/gaps");
    ana->add_option("--block", o.block, "block for delta/step in the word report");
    ana->add_option("--n", o.special_n, "factor length for the special report");
    ana->add_option("--side", o.side, "left|right for the special report");

    CLI::App* tm = app.add_subcommand("thue-morse", "token scheme for the doubling orbit");
    tm->add_option("--n", o.tm_n, "number of closure rounds");
    tm->add_flag("--json", o.json, "JSON output");

    CLI::App* st = app.add_subcommand("sturmian-encode", "two-letter directives as token pairs");
    st->add_option("--letters", o.letters, "directive over {a,b}");
    st->add_option("--decode", o.decode_csv, "token list to decode");
    st->add_flag("--json", o.json, "JSON output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("palinforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    try {
        if (gen->parsed()) return run_generate(o, out);
        if (fac->parsed()) return run_factorize(o, out);
        if (chk->parsed()) return run_check_code(o, out);
        if (con->parsed()) return run_check_conservative(o, out);
        if (tg->parsed()) return run_theta_generate(o, out);
        if (ana->parsed()) return run_analyze(o, out);
        if (tm->parsed()) return run_thue_morse(o, out);
        if (st->parsed()) return run_sturmian(o, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no verb given\n";
    return 64;
}

}  // namespace cli
}  // namespace palinforge

#endif
