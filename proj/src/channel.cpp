// SPDX-License-Identifier: Apache-2.0

#include "ocfec/channel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ocfec {

ChannelConfig ChannelConfig::explicit_pattern(Word p) {
    ChannelConfig cfg;
    cfg.mode = Mode::explicit_pattern;
    cfg.pattern = p;
    return cfg;
}

ChannelConfig ChannelConfig::iid(double flip_probability, uint64_t seed) {
    if (!(flip_probability >= 0.0 && flip_probability <= 1.0))
        throw std::invalid_argument("flip probability must be in [0, 1]");
    ChannelConfig cfg;
    cfg.mode = Mode::iid_flip;
    cfg.flip_probability = flip_probability;
    cfg.seed = seed;
    return cfg;
}

Word apply_pattern(const Word& c, const ErrorPattern& e) { return c ^ e.bits; }

namespace {

// floor(p * 2^64) as the comparison threshold; exact for p < 1 since the
// 53-bit mantissa scaled by 2^64 stays below 2^64.
uint64_t flip_threshold(double p) {
    if (p <= 0.0)
        return 0;
    return uint64_t(std::ldexp(p, 64));
}

} // namespace

std::pair<Word, ErrorPattern> random_impair(const Word& c, const ChannelConfig& cfg,
                                            uint64_t sequence_index) {
    if (cfg.mode != ChannelConfig::Mode::iid_flip)
        throw std::invalid_argument("random_impair requires an iid-flip channel");
    if (!(cfg.flip_probability >= 0.0 && cfg.flip_probability <= 1.0))
        throw std::invalid_argument("flip probability must be in [0, 1]");

    SplitMix64 rng = symbol_stream(cfg.seed, sequence_index);
    const bool always = cfg.flip_probability >= 1.0;
    const uint64_t threshold = flip_threshold(cfg.flip_probability);

    Word pattern(0, c.length());
    for (unsigned i = 0; i < c.length(); ++i) {
        const uint64_t draw = rng.next();
        if (always || draw < threshold)
            pattern = pattern.with_bit(i, true);
    }
    ErrorPattern e(pattern);
    return {apply_pattern(c, e), e};
}

PatternEnumerator::PatternEnumerator(unsigned n, unsigned max_weight)
    : n_(n), max_weight_(max_weight) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("pattern length must be in [1, 64]");
    if (max_weight > n)
        throw std::invalid_argument("max_weight exceeds pattern length");
    start_weight(0);
}

void PatternEnumerator::start_weight(unsigned w) {
    weight_ = w;
    current_ = w == 0 ? 0 : (w == 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1);
    weight_exhausted_ = false;
}

std::optional<ErrorPattern> PatternEnumerator::next() {
    while (!done_) {
        if (weight_exhausted_) {
            if (weight_ == max_weight_) {
                done_ = true;
                break;
            }
            start_weight(weight_ + 1);
        }

        const ErrorPattern out{Word(current_, n_)};

        if (weight_ == 0 || weight_ == n_) {
            weight_exhausted_ = true;
        } else {
            // Gosper's hack: next value with the same popcount.
            const uint64_t c = current_ & (~current_ + 1);
            const uint64_t r = current_ + c;
            current_ = (((r ^ current_) >> 2) / c) | r;
            const uint64_t limit = n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
            if (current_ > limit)
                weight_exhausted_ = true;
        }
        return out;
    }
    return std::nullopt;
}

std::vector<ErrorPattern> collect_patterns(unsigned n, unsigned max_weight) {
    std::vector<ErrorPattern> out;
    out.reserve(pattern_count(n, max_weight));
    PatternEnumerator gen(n, max_weight);
    while (auto p = gen.next())
        out.push_back(*p);
    return out;
}

uint64_t pattern_count(unsigned n, unsigned max_weight) {
    if (max_weight > n)
        throw std::invalid_argument("max_weight exceeds pattern length");
    // 128-bit intermediates: partial binomial sums at n = 64 brush against
    // the 64-bit range (the full sum is 2^64).
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1; // C(n, 0)
    for (unsigned w = 0; w <= max_weight; ++w) {
        total += binom;
        binom = binom * (n - w) / (w + 1);
    }
    if (total > ~uint64_t{0})
        throw std::overflow_error("pattern count exceeds 2^64 - 1");
    return uint64_t(total);
}

ErrorPattern random_pattern_of_weight(unsigned n, unsigned weight, SplitMix64& rng) {
    if (n < 1 || n > 64 || weight > n)
        throw std::invalid_argument("bad pattern length/weight");
    unsigned positions[64];
    std::iota(positions, positions + n, 0u);
    Word bits(0, n);
    for (unsigned i = 0; i < weight; ++i) {
        const unsigned j = i + unsigned(rng.next() % (n - i));
        std::swap(positions[i], positions[j]);
        bits = bits.with_bit(positions[i], true);
    }
    return ErrorPattern(bits);
}

} // namespace ocfec
