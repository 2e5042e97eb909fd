// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <set>
#include <string>

#include "ocfec/codebook.hpp"

using ocfec::Codebook;
using ocfec::CodeParams;
using ocfec::DataWord;
using ocfec::Word;

namespace {

// The full 16-entry set for n = 8, orthogonal block then antipodal block.
const std::array<std::string, 16> kGolden8 = {
    "00000000", "01010101", "00110011", "01100110",
    "00001111", "01011010", "00111100", "01101001",
    "11111111", "10101010", "11001100", "10011001",
    "11110000", "10100101", "11000011", "10010110",
};

// Distance oracle on printed strings, independent of the word machinery.
unsigned string_distance(const std::string& a, const std::string& b) {
    unsigned d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

} // namespace

TEST_CASE("code parameters") {
    const CodeParams p8 = CodeParams::from_length(8);
    CHECK(p8.k == 4);
    CHECK(p8.d_th == 2);
    CHECK(p8.t == 1);

    CHECK(CodeParams::from_length(16).k == 5);
    CHECK(CodeParams::from_length(16).t == 3);
    CHECK(CodeParams::from_length(32).t == 7);
    CHECK(CodeParams::from_length(64).t == 15);

    for (unsigned n : {8u, 16u, 32u, 64u}) {
        const CodeParams p = CodeParams::from_length(n);
        CHECK((1u << p.k) == 2 * n);
        CHECK(p.t == p.d_th - 1);
    }

    CHECK_THROWS_AS(CodeParams::from_length(4), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams::from_length(7), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams::from_length(12), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams::from_length(128), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams::from_length(0), std::invalid_argument);
}

TEST_CASE("n = 8 codebook matches the printed table") {
    const Codebook cb = Codebook::build(8);
    REQUIRE(cb.size() == 16);
    for (uint32_t i = 0; i < 16; ++i)
        CHECK(cb.codeword(i).to_string() == kGolden8[i]);

    CHECK(cb.codeword(1).to_string() == "01010101");
    CHECK(cb.codeword(0).to_string() == "00000000");
    CHECK(cb.codeword(8).to_string() == "11111111");
    CHECK(cb.codeword(6).to_string() == "00111100");
}

TEST_CASE("codebook structure for every supported length") {
    for (unsigned n : {8u, 16u, 32u, 64u}) {
        CAPTURE(n);
        const Codebook cb = Codebook::build(n);
        REQUIRE(cb.size() == 2 * n);

        std::set<uint64_t> seen;
        for (uint32_t i = 0; i < cb.size(); ++i) {
            const Word w = cb.codeword(i);
            seen.insert(w.value());
            CHECK(w.parity() == 0);
            const unsigned wt = w.weight();
            CHECK((wt == 0 || wt == n / 2 || wt == n));
        }
        CHECK(seen.size() == cb.size());

        // Complement pairing between the two blocks.
        for (uint32_t i = 0; i < n; ++i)
            CHECK(cb.codeword(i + n) == cb.codeword(i).complement());

        // Round trip over all 2n data values.
        for (uint32_t d = 0; d < cb.size(); ++d) {
            const auto back = cb.code_to_data(cb.data_to_code(DataWord{d}));
            REQUIRE(back.has_value());
            CHECK(back->value == d);
        }
    }
}

TEST_CASE("pairwise distances are n/2, or n exactly for complement pairs") {
    for (unsigned n : {8u, 16u}) {
        CAPTURE(n);
        const Codebook cb = Codebook::build(n);
        for (uint32_t i = 0; i < cb.size(); ++i) {
            const std::string a = cb.codeword(i).to_string();
            for (uint32_t j = i + 1; j < cb.size(); ++j) {
                const unsigned d = string_distance(a, cb.codeword(j).to_string());
                if (j == i + n)
                    CHECK(d == n);
                else
                    CHECK(d == n / 2);
            }
        }
    }
}

TEST_CASE("orthogonal block is closed under xor") {
    for (unsigned n : {8u, 16u, 32u}) {
        const Codebook cb = Codebook::build(n);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j)
                CHECK((cb.codeword(i) ^ cb.codeword(j)) == cb.codeword(i ^ j));
    }
}

TEST_CASE("data mapping") {
    const Codebook cb = Codebook::build(8);
    CHECK(cb.data_to_code(DataWord{6}).to_string() == "00111100");
    CHECK(cb.data_to_code(DataWord{0}).to_string() == "00000000");
    // Data 14 = 0b1110 lands in the antipodal block: complement of entry 6.
    CHECK(cb.data_to_code(DataWord{14}).to_string() == "11000011");
    CHECK_THROWS_AS(cb.data_to_code(DataWord{16}), std::out_of_range);
}

TEST_CASE("code_to_data recognizes members only") {
    const Codebook cb = Codebook::build(8);
    const auto hit = cb.code_to_data(Word::from_string("00111100"));
    REQUIRE(hit.has_value());
    CHECK(hit->value == 6);
    CHECK(cb.code_to_data(Word::from_string("00000000"))->value == 0);
    CHECK_FALSE(cb.code_to_data(Word::from_string("00110100")).has_value());
    CHECK_THROWS_AS(cb.code_to_data(Word::from_string("0011")), std::invalid_argument);
}

TEST_CASE("dump prints one codeword per line in table order") {
    const Codebook cb = Codebook::build(8);
    std::string expected;
    for (const auto& row : kGolden8) {
        expected += row;
        expected += '\n';
    }
    CHECK(cb.dump() == expected);

    CHECK_THROWS_AS(Codebook::build(4), std::invalid_argument);
    CHECK_THROWS_AS(Codebook::build(9), std::invalid_argument);
}
