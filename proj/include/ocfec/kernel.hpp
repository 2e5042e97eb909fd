// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_KERNEL_HPP
#define OCFEC_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace ocfec::kernel {

// The decoder's inner loop is "XOR the received word against every
// codebook entry and popcount the result". These kernels implement that
// loop once as portable scalar code (the reference) and once with AVX2
// intrinsics, selected at runtime. Both variants must agree bit-exactly;
// the unit suite cross-checks them on random inputs.

enum class Backend { scalar, avx2 };

/// Minimum-distance scan over a block of 64-bit words.
struct ScanResult {
    uint32_t argmin = 0;      // first index attaining the minimum
    uint32_t ties = 0;        // how many indices attain it
    uint8_t min_distance = 0; // popcount(words[argmin] ^ key)

    bool operator==(const ScanResult&) const = default;
};

/// out[i] = popcount(words[i] ^ key). out must hold words.size() bytes.
void distance_fill(std::span<const uint64_t> words, uint64_t key, uint8_t* out);

/// Minimum, first argmin and tie count of popcount(words[i] ^ key).
/// Throws std::invalid_argument on an empty span.
ScanResult distance_scan(std::span<const uint64_t> words, uint64_t key);

// Reference implementations, always available.
void distance_fill_scalar(std::span<const uint64_t> words, uint64_t key, uint8_t* out);
ScanResult distance_scan_scalar(std::span<const uint64_t> words, uint64_t key);

#if defined(__x86_64__) || defined(_M_X64)
// Compiled with -mavx2; call only when backend_available(Backend::avx2).
void distance_fill_avx2(std::span<const uint64_t> words, uint64_t key, uint8_t* out);
ScanResult distance_scan_avx2(std::span<const uint64_t> words, uint64_t key);
#endif

bool backend_available(Backend b);
Backend active_backend();

/// Force a backend (tests, benchmarking). Throws std::invalid_argument if
/// the machine does not support it.
void set_backend(Backend b);

const char* backend_name(Backend b);

} // namespace ocfec::kernel

#endif
