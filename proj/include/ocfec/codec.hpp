// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_CODEC_HPP
#define OCFEC_CODEC_HPP

#include <cstdint>
#include <vector>

#include "ocfec/codebook.hpp"
#include "ocfec/word.hpp"

namespace ocfec {

enum class DecodeKind : uint8_t {
    exact_match,           // distance 0: the received word is a codeword
    corrected,             // unique minimum, 1 <= distance <= t
    retransmit,            // minimum attained by >= 2 codewords (REQ)
    nearest_beyond_radius, // unique minimum but distance > t
};

/// What to do with a unique minimum beyond the correction radius. The
/// guarantee only covers distances up to t, so the conservative policy
/// treats nearest_beyond_radius like a retransmission request; the
/// accept-nearest policy takes the closest codeword anyway.
enum class DecodePolicy : uint8_t { conservative, accept_nearest };

/// Result of minimum-distance correlation decoding.
struct DecodeResult {
    DecodeKind kind = DecodeKind::exact_match;
    DataWord data;         // closest match; for retransmit: lowest tied index
    unsigned distance = 0; // minimum Hamming distance over the codebook
    unsigned ties = 1;     // number of codewords attaining the minimum

    bool operator==(const DecodeResult&) const = default;
};

/// Maps a data symbol to its codeword. No parity bit is appended; the code
/// has zero parity by construction, so the receiver regenerates it for free.
Word encode(const Codebook& cb, DataWord d);

/// Hamming distance from the received word to every codebook entry, in
/// entry order. Throws std::invalid_argument on length mismatch.
std::vector<unsigned> distances(const Codebook& cb, const Word& received);

/// Minimum-distance decode. Let m be the smallest distance and A the set of
/// entries attaining it: m = 0 -> exact_match; |A| >= 2 -> retransmit;
/// m <= t -> corrected; otherwise nearest_beyond_radius. Pure function.
DecodeResult decode(const Codebook& cb, const Word& received);

/// Parity-only baseline detector: flags corruption iff the received word
/// has odd parity. Blind to every even-weight error pattern.
bool parity_detects(const Word& received);

/// True when the outcome asks for a retransmission under the given policy.
bool requests_retransmit(const DecodeResult& r, DecodePolicy policy);

} // namespace ocfec

#endif
