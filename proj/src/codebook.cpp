// SPDX-License-Identifier: Apache-2.0

#include "ocfec/codebook.hpp"

#include <bit>
#include <stdexcept>

namespace ocfec {

CodeParams CodeParams::from_length(unsigned n) {
    if (n < 8 || !std::has_single_bit(n))
        throw std::invalid_argument("code length must be a power of two, n >= 8");
    if (n > 64)
        throw std::invalid_argument("code length above 64 is not supported");
    CodeParams p;
    p.n = n;
    p.k = unsigned(std::bit_width(n)); // log2(n) + 1
    p.d_th = n / 4;
    p.t = p.d_th - 1;
    return p;
}

Codebook Codebook::build(unsigned n) {
    const CodeParams params = CodeParams::from_length(n);
    const uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    std::vector<uint64_t> entries(2 * size_t{n});
    for (uint32_t i = 0; i < n; ++i) {
        uint64_t v = 0;
        for (uint32_t j = 0; j < n; ++j)
            if (std::popcount(i & j) & 1)
                v |= uint64_t{1} << (n - 1 - j);
        entries[i] = v;
        entries[i + n] = ~v & mask;
    }
    return Codebook(params, std::move(entries));
}

Codebook::Codebook(CodeParams params, std::vector<uint64_t> entries)
    : params_(params), entries_(std::move(entries)) {
    index_.reserve(entries_.size());
    for (uint32_t i = 0; i < entries_.size(); ++i)
        index_.emplace(entries_[i], i);
}

Word Codebook::codeword(uint32_t index) const {
    if (index >= entries_.size())
        throw std::out_of_range("codeword index out of range");
    return Word(entries_[index], params_.n);
}

Word Codebook::data_to_code(DataWord d) const {
    if (d.value >= entries_.size())
        throw std::out_of_range("data value out of range for this code");
    return Word(entries_[d.value], params_.n);
}

std::optional<DataWord> Codebook::code_to_data(const Word& c) const {
    if (c.length() != params_.n)
        throw std::invalid_argument("codeword length does not match the code");
    const auto it = index_.find(c.value());
    if (it == index_.end())
        return std::nullopt;
    return DataWord{it->second};
}

std::string Codebook::dump() const {
    std::string out;
    out.reserve(size_t(size()) * (params_.n + 1));
    for (uint32_t i = 0; i < size(); ++i) {
        out += codeword(i).to_string();
        out += '\n';
    }
    return out;
}

} // namespace ocfec
