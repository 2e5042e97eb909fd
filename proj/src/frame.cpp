// SPDX-License-Identifier: Apache-2.0

#include "ocfec/frame.hpp"

#include <cstring>
#include <stdexcept>

namespace ocfec::frame {

namespace {

class BitWriter {
public:
    void put(bool bit) {
        if (offset_ == 0)
            bytes_.push_back(0);
        if (bit)
            bytes_.back() |= uint8_t(0x80u >> offset_);
        offset_ = (offset_ + 1) & 7;
    }

    void put_word(uint64_t value, unsigned bits) {
        for (unsigned i = 0; i < bits; ++i)
            put((value >> (bits - 1 - i)) & 1);
    }

    std::vector<uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<uint8_t> bytes_;
    unsigned offset_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    /// Reads `bits` MSB-first; positions past the end read as zero.
    uint64_t get_word(unsigned bits) {
        uint64_t v = 0;
        for (unsigned i = 0; i < bits; ++i) {
            v <<= 1;
            const uint64_t byte = pos_ >> 3;
            if (byte < bytes_.size())
                v |= (bytes_[byte] >> (7 - (pos_ & 7))) & 1u;
            ++pos_;
        }
        return v;
    }

private:
    std::span<const uint8_t> bytes_;
    uint64_t pos_ = 0;
};

void put_be(std::vector<uint8_t>& out, uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i)
        out.push_back(uint8_t(v >> (8 * (bytes - 1 - i))));
}

uint64_t get_be(std::span<const uint8_t> in, size_t pos, unsigned bytes) {
    uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i)
        v = (v << 8) | in[pos + i];
    return v;
}

} // namespace

std::vector<uint8_t> write_header(const Header& h) {
    std::vector<uint8_t> out(kMagic, kMagic + sizeof kMagic);
    put_be(out, h.n, 2);
    put_be(out, h.symbol_count, 8);
    out.push_back(uint8_t(h.pad_bits));
    return out;
}

Header read_header(std::span<const uint8_t> stream) {
    if (stream.size() < kHeaderSize)
        throw std::runtime_error("stream shorter than a frame header");
    if (std::memcmp(stream.data(), kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("bad magic bytes");

    Header h;
    h.n = unsigned(get_be(stream, 6, 2));
    h.symbol_count = get_be(stream, 8, 8);
    h.pad_bits = stream[16];

    CodeParams params;
    try {
        params = CodeParams::from_length(h.n);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("corrupt header: ") + e.what());
    }
    if (h.pad_bits >= params.k)
        throw std::runtime_error("corrupt header: pad exceeds symbol width");
    if (h.symbol_count == 0 && h.pad_bits != 0)
        throw std::runtime_error("corrupt header: pad without symbols");
    return h;
}

std::vector<uint8_t> encode_stream(const Codebook& cb,
                                   std::span<const uint8_t> payload) {
    const unsigned k = cb.params().k;
    const unsigned n = cb.params().n;
    const uint64_t payload_bits = uint64_t(payload.size()) * 8;
    const uint64_t symbols = (payload_bits + k - 1) / k;
    const unsigned pad = unsigned(symbols * k - payload_bits);

    std::vector<uint8_t> out =
        write_header(Header{n, symbols, pad});

    BitReader reader(payload);
    BitWriter writer;
    for (uint64_t s = 0; s < symbols; ++s) {
        const auto data = uint32_t(reader.get_word(k));
        writer.put_word(encode(cb, DataWord{data}).value(), n);
    }
    const std::vector<uint8_t> packed = writer.take();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

DecodedStream decode_stream(std::span<const uint8_t> stream, DecodePolicy policy) {
    const Header h = read_header(stream);
    const Codebook cb = Codebook::build(h.n);
    const unsigned k = cb.params().k;

    const uint64_t code_bits = h.symbol_count * h.n;
    const uint64_t expected_bytes = (code_bits + 7) / 8;
    if (stream.size() - kHeaderSize < expected_bytes)
        throw std::runtime_error("truncated codeword stream");
    if (stream.size() - kHeaderSize > expected_bytes)
        throw std::runtime_error("trailing bytes after the codeword stream");

    const uint64_t payload_bits = h.symbol_count * k - h.pad_bits;
    if (payload_bits % 8 != 0)
        throw std::runtime_error("corrupt header: payload bits not a byte multiple");

    DecodedStream out;
    BitReader reader(stream.subspan(kHeaderSize));
    BitWriter writer;
    for (uint64_t s = 0; s < h.symbol_count; ++s) {
        const Word received(reader.get_word(h.n), h.n);
        const DecodeResult r = decode(cb, received);
        switch (r.kind) {
        case DecodeKind::exact_match: ++out.stats.exact; break;
        case DecodeKind::corrected: ++out.stats.corrected; break;
        case DecodeKind::retransmit: ++out.stats.retransmit; break;
        case DecodeKind::nearest_beyond_radius: ++out.stats.beyond_radius; break;
        }
        if (requests_retransmit(r, policy))
            ++out.stats.markers;
        writer.put_word(r.data.value, k);
    }

    std::vector<uint8_t> payload = writer.take();
    payload.resize(payload_bits / 8);
    out.payload = std::move(payload);
    return out;
}

} // namespace ocfec::frame
