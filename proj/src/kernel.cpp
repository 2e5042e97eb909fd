// SPDX-License-Identifier: Apache-2.0

#include "ocfec/kernel.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace ocfec::kernel {

void distance_fill_scalar(std::span<const uint64_t> words, uint64_t key, uint8_t* out) {
    for (size_t i = 0; i < words.size(); ++i)
        out[i] = uint8_t(std::popcount(words[i] ^ key));
}

ScanResult distance_scan_scalar(std::span<const uint64_t> words, uint64_t key) {
    if (words.empty())
        throw std::invalid_argument("distance_scan: empty word block");
    ScanResult r{0, 1, uint8_t(std::popcount(words[0] ^ key))};
    for (size_t i = 1; i < words.size(); ++i) {
        const auto d = unsigned(std::popcount(words[i] ^ key));
        if (d < r.min_distance) {
            r.min_distance = uint8_t(d);
            r.argmin = uint32_t(i);
            r.ties = 1;
        } else if (d == r.min_distance) {
            ++r.ties;
        }
    }
    return r;
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect_backend() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_backend()};
    return slot;
}

} // namespace

bool backend_available(Backend b) {
    switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("kernel backend not supported on this machine");
    backend_slot().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    }
    return "?";
}

void distance_fill(std::span<const uint64_t> words, uint64_t key, uint8_t* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2)
        return distance_fill_avx2(words, key, out);
#endif
    distance_fill_scalar(words, key, out);
}

ScanResult distance_scan(std::span<const uint64_t> words, uint64_t key) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2)
        return distance_scan_avx2(words, key);
#endif
    return distance_scan_scalar(words, key);
}

} // namespace ocfec::kernel
