// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_WORD_HPP
#define OCFEC_WORD_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ocfec {

/// Fixed-length binary word of 1..64 bits.
///
/// Bit index 0 is the leftmost position of the printed form and the first
/// bit on the wire. Internally bit index i lives at machine bit (length-1-i),
/// so the numeric value of a word equals its printed form read as binary.
class Word {
public:
    Word() = default;

    Word(uint64_t value, unsigned length) : value_(value), length_(length) {
        if (length < 1 || length > 64)
            throw std::invalid_argument("Word: length must be in [1, 64]");
        if (value & ~mask())
            throw std::invalid_argument("Word: value wider than length");
    }

    static Word from_string(std::string_view s) {
        if (s.empty() || s.size() > 64)
            throw std::invalid_argument("Word: string length must be in [1, 64]");
        uint64_t v = 0;
        for (char c : s) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("Word: string must be '0'/'1' only");
            v = (v << 1) | uint64_t(c - '0');
        }
        return Word(v, unsigned(s.size()));
    }

    uint64_t value() const { return value_; }
    unsigned length() const { return length_; }

    /// Bit at printed index i (0 = leftmost).
    bool bit(unsigned i) const {
        if (i >= length_) throw std::out_of_range("Word::bit: index out of range");
        return (value_ >> (length_ - 1 - i)) & 1u;
    }

    Word with_bit(unsigned i, bool b) const {
        if (i >= length_) throw std::out_of_range("Word::with_bit: index out of range");
        const uint64_t m = uint64_t{1} << (length_ - 1 - i);
        return Word(b ? (value_ | m) : (value_ & ~m), length_);
    }

    unsigned weight() const { return unsigned(std::popcount(value_)); }

    /// XOR-reduction of all bits; 0 for every valid biorthogonal codeword.
    unsigned parity() const { return weight() & 1u; }

    Word complement() const { return Word(~value_ & mask(), length_); }

    std::string to_string() const {
        std::string s(length_, '0');
        for (unsigned i = 0; i < length_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    friend Word operator^(const Word& a, const Word& b) {
        if (a.length_ != b.length_)
            throw std::invalid_argument("Word: XOR of mismatched lengths");
        return Word(a.value_ ^ b.value_, a.length_);
    }

    bool operator==(const Word&) const = default;

private:
    uint64_t mask() const {
        return length_ == 64 ? ~uint64_t{0} : (uint64_t{1} << length_) - 1;
    }

    uint64_t value_ = 0;
    unsigned length_ = 1;
};

/// Hamming distance between equal-length words.
inline unsigned hamming_distance(const Word& a, const Word& b) {
    return (a ^ b).weight();
}

} // namespace ocfec

#endif
