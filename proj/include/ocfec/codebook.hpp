// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_CODEBOOK_HPP
#define OCFEC_CODEBOOK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ocfec/word.hpp"

namespace ocfec {

/// Parameters of a biorthogonal code of length n.
///
///   k    = log2(n) + 1   data bits per symbol (the set has 2^k = 2n codewords)
///   d_th = n/4           decision threshold, midway between two codewords
///   t    = n/4 - 1       guaranteed correction radius
struct CodeParams {
    unsigned n = 0;
    unsigned k = 0;
    unsigned t = 0;
    unsigned d_th = 0;

    /// Validates n: power of two, 8 <= n <= 64 (one machine word per codeword).
    /// Throws std::invalid_argument otherwise.
    static CodeParams from_length(unsigned n);
};

/// A k-bit data symbol, value in [0, 2n).
struct DataWord {
    uint32_t value = 0;
    bool operator==(const DataWord&) const = default;
};

/// The ordered set of 2n biorthogonal codewords for a given length n.
///
/// Entries 0..n-1 are the orthogonal block in Sylvester-Hadamard natural
/// order: bit j of entry i is popcount(i AND j) mod 2. Entries n..2n-1 are
/// the antipodal block, entry n+i being the complement of entry i. The
/// data <-> codeword bijection is the entry index itself.
///
/// Immutable after construction; safe for unrestricted concurrent reads.
class Codebook {
public:
    static Codebook build(unsigned n);

    const CodeParams& params() const { return params_; }
    uint32_t size() const { return uint32_t(entries_.size()); }

    Word codeword(uint32_t index) const;

    /// Packed codeword values in entry order, for the distance kernels.
    std::span<const uint64_t> raw() const { return entries_; }

    /// entries[d.value]; throws std::out_of_range for d.value >= 2n.
    Word data_to_code(DataWord d) const;

    /// Inverse of data_to_code. Empty when c is not an exact member of the
    /// set (impaired words go through codec decode instead).
    std::optional<DataWord> code_to_data(const Word& c) const;

    /// One codeword per line as ASCII '0'/'1', orthogonal block first.
    std::string dump() const;

private:
    Codebook(CodeParams params, std::vector<uint64_t> entries);

    CodeParams params_;
    std::vector<uint64_t> entries_;
    std::unordered_map<uint64_t, uint32_t> index_;
};

} // namespace ocfec

#endif
