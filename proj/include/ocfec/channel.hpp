// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_CHANNEL_HPP
#define OCFEC_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ocfec/word.hpp"

namespace ocfec {

/// splitmix64: the fixed, documented generator behind every seeded run.
/// state += 0x9E3779B97F4A7C15; output = finalizer(state) with the standard
/// 30/27/31 shift, 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB multiply mix.
/// Integer-only, identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

private:
    uint64_t state_;
};

/// Independent per-symbol stream: decorrelates adjacent sequence indices by
/// running the finalizer over seed + gamma * index before drawing.
inline SplitMix64 symbol_stream(uint64_t seed, uint64_t sequence_index) {
    return SplitMix64(SplitMix64::mix(seed + SplitMix64::kGamma * sequence_index));
}

/// An n-bit error pattern; XORed onto a codeword it flips weight() bits.
struct ErrorPattern {
    Word bits;
    unsigned weight = 0;

    ErrorPattern() = default;
    explicit ErrorPattern(Word b) : bits(b), weight(b.weight()) {}
};

struct ChannelConfig {
    enum class Mode { explicit_pattern, iid_flip };

    Mode mode = Mode::iid_flip;
    Word pattern;                  // explicit_pattern mode
    double flip_probability = 0.0; // iid_flip mode
    uint64_t seed = 0;             // iid_flip mode

    static ChannelConfig explicit_pattern(Word p);
    /// Throws std::invalid_argument unless p is in [0, 1].
    static ChannelConfig iid(double flip_probability, uint64_t seed);
};

/// Bitwise XOR of codeword and pattern. Throws on length mismatch.
Word apply_pattern(const Word& c, const ErrorPattern& e);

/// i.i.d. bit-flip channel. Bit i (printed order, one draw per bit) flips
/// iff the i-th draw of symbol_stream(seed, sequence_index) is below
/// floor(p * 2^64); p = 1 always flips. Returns the impaired word and the
/// realized pattern. Same (seed, index) -> same output, any platform.
std::pair<Word, ErrorPattern> random_impair(const Word& c, const ChannelConfig& cfg,
                                            uint64_t sequence_index = 0);

/// Streams every n-bit pattern of weight 0..max_weight exactly once, in
/// weight-then-lexicographic order (ascending weight, then ascending printed
/// bitstring, i.e. ascending numeric value).
class PatternEnumerator {
public:
    PatternEnumerator(unsigned n, unsigned max_weight);

    /// Next pattern, or empty when exhausted.
    std::optional<ErrorPattern> next();

private:
    void start_weight(unsigned w);

    unsigned n_;
    unsigned max_weight_;
    unsigned weight_ = 0;
    uint64_t current_ = 0;
    bool done_ = false;
    bool weight_exhausted_ = false;
};

/// All patterns of weight 0..max_weight, materialized.
std::vector<ErrorPattern> collect_patterns(unsigned n, unsigned max_weight);

/// Sum of C(n, w) for w = 0..max_weight.
uint64_t pattern_count(unsigned n, unsigned max_weight);

/// Uniformly random pattern of exactly the given weight (partial
/// Fisher-Yates over bit positions).
ErrorPattern random_pattern_of_weight(unsigned n, unsigned weight, SplitMix64& rng);

} // namespace ocfec

#endif
