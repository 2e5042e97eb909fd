// SPDX-License-Identifier: Apache-2.0

#include "ocfec/codec.hpp"

#include <stdexcept>

#include "ocfec/kernel.hpp"

namespace ocfec {

Word encode(const Codebook& cb, DataWord d) { return cb.data_to_code(d); }

std::vector<unsigned> distances(const Codebook& cb, const Word& received) {
    if (received.length() != cb.params().n)
        throw std::invalid_argument("received word length does not match the code");
    std::vector<uint8_t> buf(cb.size());
    kernel::distance_fill(cb.raw(), received.value(), buf.data());
    return std::vector<unsigned>(buf.begin(), buf.end());
}

DecodeResult decode(const Codebook& cb, const Word& received) {
    if (received.length() != cb.params().n)
        throw std::invalid_argument("received word length does not match the code");
    const kernel::ScanResult scan = kernel::distance_scan(cb.raw(), received.value());

    DecodeResult r;
    r.data = DataWord{scan.argmin};
    r.distance = scan.min_distance;
    r.ties = scan.ties;
    if (scan.min_distance == 0)
        r.kind = DecodeKind::exact_match;
    else if (scan.ties >= 2)
        r.kind = DecodeKind::retransmit;
    else if (scan.min_distance <= cb.params().t)
        r.kind = DecodeKind::corrected;
    else
        r.kind = DecodeKind::nearest_beyond_radius;
    return r;
}

bool parity_detects(const Word& received) { return received.parity() == 1; }

bool requests_retransmit(const DecodeResult& r, DecodePolicy policy) {
    if (r.kind == DecodeKind::retransmit)
        return true;
    return r.kind == DecodeKind::nearest_beyond_radius &&
           policy == DecodePolicy::conservative;
}

} // namespace ocfec
