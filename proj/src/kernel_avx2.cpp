// SPDX-License-Identifier: Apache-2.0

#include "ocfec/kernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace ocfec::kernel {

namespace {

// Per-64-bit-lane popcount: nibble LUT shuffle, then SAD against zero to
// sum the sixteen byte counts of each lane.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i nib =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(nib, _mm256_setzero_si256());
}

} // namespace

void distance_fill_avx2(std::span<const uint64_t> words, uint64_t key, uint8_t* out) {
    const __m256i vkey = _mm256_set1_epi64x(int64_t(key));
    const size_t n = words.size();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i w =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
        const __m256i d = popcount_epi64(_mm256_xor_si256(w, vkey));
        alignas(32) uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), d);
        out[i + 0] = uint8_t(lanes[0]);
        out[i + 1] = uint8_t(lanes[1]);
        out[i + 2] = uint8_t(lanes[2]);
        out[i + 3] = uint8_t(lanes[3]);
    }
    for (; i < n; ++i)
        out[i] = uint8_t(std::popcount(words[i] ^ key));
}

ScanResult distance_scan_avx2(std::span<const uint64_t> words, uint64_t key) {
    if (words.empty())
        throw std::invalid_argument("distance_scan: empty word block");

    // Distances of 64-bit words never exceed 64, so 0xFF padding can never
    // win the minimum.
    constexpr size_t kChunk = 256;
    alignas(32) uint8_t buf[kChunk];

    ScanResult best{0, 0, 0xFF};
    bool argmin_set = false;

    for (size_t base = 0; base < words.size(); base += kChunk) {
        const size_t len = std::min(kChunk, words.size() - base);
        distance_fill_avx2(words.subspan(base, len), key, buf);
        const size_t padded = (len + 31) & ~size_t{31};
        if (padded > len)
            std::memset(buf + len, 0xFF, padded - len);

        __m256i vmin = _mm256_set1_epi8(char(0xFF));
        for (size_t j = 0; j < padded; j += 32)
            vmin = _mm256_min_epu8(
                vmin, _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + j)));

        alignas(32) uint8_t lanes[32];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmin);
        uint8_t m = lanes[0];
        for (int j = 1; j < 32; ++j)
            m = std::min(m, lanes[j]);

        if (m > best.min_distance)
            continue;
        if (m < best.min_distance) {
            best.min_distance = m;
            best.ties = 0;
            argmin_set = false;
        }
        const __m256i vm = _mm256_set1_epi8(char(m));
        for (size_t j = 0; j < padded; j += 32) {
            const __m256i eq = _mm256_cmpeq_epi8(
                _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + j)), vm);
            const uint32_t mask = uint32_t(_mm256_movemask_epi8(eq));
            if (mask == 0)
                continue;
            if (!argmin_set) {
                best.argmin = uint32_t(base + j + unsigned(std::countr_zero(mask)));
                argmin_set = true;
            }
            best.ties += uint32_t(std::popcount(mask));
        }
    }
    return best;
}

} // namespace ocfec::kernel

#endif // x86-64
