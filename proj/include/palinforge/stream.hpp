#ifndef PALINFORGE_STREAM_HPP
#define PALINFORGE_STREAM_HPP

#include <functional>

#include "codes.hpp"

namespace palinforge {

struct stream_exhausted : std::runtime_error {
    explicit stream_exhausted(std::size_t index)
        : std::runtime_error("directive_stream: finite stream has no token at index " +
                             std::to_string(index)) {}
};

// Source of directive tokens drawn from a fixed code: a finite list, an
// eventually periodic stream (preamble then repeated period), or a pull
// generator for anything else. Access is by index, so a stream can be read
// from several places without shared state.
class directive_stream {
  public:
    static directive_stream finite(code X, std::vector<word> tokens) {
        directive_stream d(std::move(X));
        d.kind_ = kind_t::finite;
        d.preamble_ = std::move(tokens);
        d.check_members(d.preamble_);
        return d;
    }

    static directive_stream periodic(code X, std::vector<word> preamble, std::vector<word> period) {
        if (period.empty())
            throw std::invalid_argument("directive_stream: empty period");
        directive_stream d(std::move(X));
        d.kind_ = kind_t::periodic;
        d.preamble_ = std::move(preamble);
        d.period_ = std::move(period);
        d.check_members(d.preamble_);
        d.check_members(d.period_);
        return d;
    }

    static directive_stream generated(code X, std::function<word(std::size_t)> gen) {
        directive_stream d(std::move(X));
        d.kind_ = kind_t::generated;
        d.gen_ = std::move(gen);
        return d;
    }

    bool is_finite() const { return kind_ == kind_t::finite; }
    bool is_periodic() const { return kind_ == kind_t::periodic; }
    bool has_generator() const { return kind_ == kind_t::generated; }

    const code& tokens_code() const { return code_; }
    const std::vector<word>& preamble() const { return preamble_; }
    const std::vector<word>& period() const { return period_; }
    std::size_t finite_size() const { return preamble_.size(); }

    word token(std::size_t i) const {
        switch (kind_) {
            case kind_t::finite:
                if (i >= preamble_.size()) throw stream_exhausted(i);
                return preamble_[i];
            case kind_t::periodic:
                if (i < preamble_.size()) return preamble_[i];
                return period_[(i - preamble_.size()) % period_.size()];
            case kind_t::generated: {
                word x = gen_(i);
                if (!code_.contains(x))
                    throw std::invalid_argument("directive_stream: generated token outside code: " + x);
                return x;
            }
        }
        throw std::logic_error("directive_stream: bad kind");
    }

    // Tokens that occur infinitely often; defined for periodic streams only.
    std::vector<word> persistent_tokens() const {
        if (kind_ != kind_t::periodic)
            throw std::invalid_argument("directive_stream: persistent tokens need a periodic stream");
        std::vector<word> out(period_);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    explicit directive_stream(code X) : code_(std::move(X)) {}

    void check_members(const std::vector<word>& ws) const {
        for (const auto& x : ws)
            if (!code_.contains(x))
                throw std::invalid_argument("directive_stream: token outside code: " + x);
    }

    enum class kind_t { finite, periodic, generated };
    code code_;
    kind_t kind_ = kind_t::finite;
    std::vector<word> preamble_;
    std::vector<word> period_;
    std::function<word(std::size_t)> gen_;
};

// A periodic stream alternates when two tokens that occur infinitely often
// are prefix-incomparable. Undecidable from a pull generator, so only
// periodic streams are accepted; finite streams have no persistent tokens.
inline bool is_alternating(const directive_stream& d) {
    auto persistent = d.persistent_tokens();
    for (std::size_t i = 0; i < persistent.size(); ++i)
        for (std::size_t j = i + 1; j < persistent.size(); ++j) {
            const word& x = persistent[i];
            const word& y = persistent[j];
            std::size_t m = std::min(x.size(), y.size());
            if (std::string_view(x).substr(0, m) != std::string_view(y).substr(0, m))
                return true;  // incomparable pair
        }
    return false;
}

// A directive over a finite maximal prefix code X is letter-recurrent when
// every element of X occurs infinitely often, i.e. inside the period.
inline bool is_xar_directive(const directive_stream& d) {
    const code& X = d.tokens_code();
    if (!is_prefix_code(X) || !kraft_equality(X))
        throw std::invalid_argument("is_xar_directive: code must be a maximal prefix code");
    auto persistent = d.persistent_tokens();
    for (const auto& x : X.words)
        if (!std::binary_search(persistent.begin(), persistent.end(), x)) return false;
    return true;
}

}  // namespace palinforge

#endif
