// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_FRAME_HPP
#define OCFEC_FRAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ocfec/codebook.hpp"
#include "ocfec/codec.hpp"

namespace ocfec::frame {

// Framed stream layout:
//   magic "OCFEC1"            6 bytes
//   code length n             2 bytes big-endian
//   symbol count              8 bytes big-endian
//   pad bits                  1 byte (zero bits appended to fill the
//                             final k-bit symbol; 0 when none)
//   packed codeword bits      ceil(symbol_count * n / 8) bytes, each
//                             codeword MSB-first, final byte zero-padded
//
// Payload bytes are split MSB-first into k-bit data symbols.

inline constexpr uint8_t kMagic[6] = {'O', 'C', 'F', 'E', 'C', '1'};
inline constexpr size_t kHeaderSize = 17;

struct Header {
    unsigned n = 0;
    uint64_t symbol_count = 0;
    unsigned pad_bits = 0;
};

std::vector<uint8_t> write_header(const Header& h);

/// Throws std::runtime_error on bad magic, bad n, bad pad, or a stream
/// shorter than a header.
Header read_header(std::span<const uint8_t> stream);

/// Payload -> framed codeword stream.
std::vector<uint8_t> encode_stream(const Codebook& cb,
                                   std::span<const uint8_t> payload);

struct DecodeStats {
    uint64_t exact = 0;
    uint64_t corrected = 0;
    uint64_t retransmit = 0;
    uint64_t beyond_radius = 0;
    uint64_t markers = 0; // symbols left flagged as erasures under the policy
};

struct DecodedStream {
    std::vector<uint8_t> payload;
    DecodeStats stats;
};

/// Framed stream -> payload + per-class outcome counts. Marker symbols keep
/// the nearest candidate's bits in the payload so the output length is
/// stable; the caller decides what an erasure means (the CLI exits 1).
/// Throws std::runtime_error on a corrupt header or truncated stream.
DecodedStream decode_stream(std::span<const uint8_t> stream, DecodePolicy policy);

} // namespace ocfec::frame

#endif
