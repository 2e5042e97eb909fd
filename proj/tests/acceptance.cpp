// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ocfec/analysis.hpp"
#include "ocfec/channel.hpp"
#include "ocfec/cli.hpp"
#include "ocfec/codebook.hpp"
#include "ocfec/codec.hpp"
#include "ocfec/frame.hpp"
#include "ocfec/linksim.hpp"

using namespace ocfec;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond)
        throw CheckFailure(what);
}

template <typename A, typename B>
void require_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == A(b))) {
        std::ostringstream ss;
        ss << what << " (got " << a << ", want " << b << ")";
        throw CheckFailure(ss.str());
    }
}

// ---------------------------------------------------------------- criterion 1

void criterion_codebook_golden() {
    const std::array<std::string, 16> rows = {
        "00000000", "01010101", "00110011", "01100110",
        "00001111", "01011010", "00111100", "01101001",
        "11111111", "10101010", "11001100", "10011001",
        "11110000", "10100101", "11000011", "10010110",
    };
    const Codebook cb = Codebook::build(8);
    require_eq(cb.size(), 16u, "codebook size");
    for (uint32_t i = 0; i < 16; ++i)
        require_eq(cb.codeword(i).to_string(), rows[i],
                   "codeword " + std::to_string(i));
}

// ---------------------------------------------------------------- criterion 2

void criterion_parameter_arithmetic() {
    const CodeParams p8 = CodeParams::from_length(8);
    require_eq(p8.d_th, 2u, "d_th at n = 8");
    require_eq(p8.t, 1u, "t at n = 8");

    const std::array<std::pair<unsigned, unsigned>, 4> rows = {
        {{8, 1}, {16, 3}, {32, 7}, {64, 15}}};
    for (const auto& [n, t] : rows)
        require_eq(CodeParams::from_length(n).t, t,
                   "t at n = " + std::to_string(n));
}

// ---------------------------------------------------------------- criterion 3

void criterion_three_cases() {
    const Codebook cb = Codebook::build(8);
    require_eq(encode(cb, DataWord{6}).to_string(), std::string("00111100"),
               "encode 0110");

    const DecodeResult exact = decode(cb, Word::from_string("00111100"));
    require(exact.kind == DecodeKind::exact_match && exact.data.value == 6,
            "decode 00111100 must be exact_match(0110)");

    const DecodeResult corr = decode(cb, Word::from_string("00110100"));
    require(corr.kind == DecodeKind::corrected && corr.data.value == 6 &&
                corr.distance == 1,
            "decode 00110100 must be corrected(0110, 1)");

    const DecodeResult tie = decode(cb, Word::from_string("00110000"));
    require(tie.kind == DecodeKind::retransmit,
            "decode 00110000 must request retransmission");
}

// ---------------------------------------------------------------- criterion 4

void criterion_correction_guarantee() {
    const CorrectionSweepResult r8 = correction_sweep(Codebook::build(8), 1);
    require_eq(r8.cases, uint64_t{128}, "n = 8 sweep cases");
    require_eq(r8.failures, uint64_t{0}, "n = 8 sweep failures");

    const CorrectionSweepResult r16 = correction_sweep(Codebook::build(16), 3);
    require_eq(r16.cases, uint64_t{22272}, "n = 16 sweep cases");
    require_eq(r16.failures, uint64_t{0}, "n = 16 sweep failures");

    for (unsigned n : {32u, 64u}) {
        const Codebook cb = Codebook::build(n);
        const CorrectionSweepResult r = sampled_sweep(cb, cb.params().t, 100000, 2024);
        require_eq(r.cases, uint64_t{100000},
                   "n = " + std::to_string(n) + " sampled cases");
        require_eq(r.failures, uint64_t{0},
                   "n = " + std::to_string(n) + " sampled failures");
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_detection_census() {
    const DetectionCensus c8 = detection_census(Codebook::build(8));
    require_eq(c8.exact, uint64_t{16}, "n = 8 zero-distance words");
    require(c8.detection_rate() == 0.9375, "n = 8 detection rate must be 0.9375");

    const DetectionCensus c16 = detection_census(Codebook::build(16));
    require_eq(c16.exact, uint64_t{32}, "n = 16 zero-distance words");
    require(std::abs(c16.detection_rate() - 0.99951) <= 0.00001,
            "n = 16 detection rate must be 0.99951 +- 0.00001");
}

// ---------------------------------------------------------------- criterion 6

void criterion_parity_baseline() {
    require(parity_baseline_rate(8) == 0.5, "parity rate at n = 8 must be 0.5");
    require(parity_baseline_rate(16) == 0.5, "parity rate at n = 16 must be 0.5");

    // The improvement the correlation receiver buys over parity-only.
    const double gap8 =
        detection_census(Codebook::build(8)).detection_rate() - parity_baseline_rate(8);
    require(gap8 == 0.4375, "gap at n = 8 must be exactly 43.75 points");
    const double gap16 = detection_census(Codebook::build(16)).detection_rate() -
                         parity_baseline_rate(16);
    require(std::abs(gap16 - 0.49951) <= 0.00001,
            "gap at n = 16 must be 49.951 +- 0.001 points");
}

// ---------------------------------------------------------------- criterion 7

unsigned receiver_cycles(const Codebook& cb, const Word& received) {
    Receiver rx(cb);
    for (unsigned i = 0; i < received.length(); ++i)
        rx.clock_bit(received.bit(i));
    while (rx.phase() != Receiver::Phase::done)
        rx.clock_tick();
    return rx.processing_cycles();
}

void criterion_cycle_model() {
    const Codebook cb8 = Codebook::build(8);
    for (uint32_t i = 0; i < cb8.size(); ++i)
        for (uint64_t e = 0; e < 256; ++e)
            require_eq(receiver_cycles(cb8, cb8.codeword(i) ^ Word(e, 8)), 18u,
                       "processing cycles at n = 8");

    const Codebook cb16 = Codebook::build(16);
    PatternEnumerator gen(16, 3);
    while (auto e = gen.next())
        for (uint32_t i = 0; i < cb16.size(); ++i)
            require_eq(receiver_cycles(cb16, cb16.codeword(i) ^ e->bits), 34u,
                       "processing cycles at n = 16");
}

// ---------------------------------------------------------------- criterion 8

void criterion_simulator_equivalence() {
    // n = 8: every codeword x every possible 8-bit pattern.
    const Codebook cb8 = Codebook::build(8);
    for (uint32_t i = 0; i < cb8.size(); ++i) {
        for (uint64_t e = 0; e < 256; ++e) {
            const ChannelConfig cfg = ChannelConfig::explicit_pattern(Word(e, 8));
            const LinkResult link = run_link(cb8, DataWord{i}, cfg);
            const DecodeResult lib = decode(cb8, cb8.codeword(i) ^ Word(e, 8));
            require(link.outcome == lib,
                    "link and library outcomes differ for codeword " +
                        std::to_string(i) + ", pattern " + Word(e, 8).to_string());
        }
    }

    // n = 16: every codeword x every pattern up to the radius.
    const Codebook cb16 = Codebook::build(16);
    PatternEnumerator gen(16, cb16.params().t);
    while (auto e = gen.next()) {
        const ChannelConfig cfg = ChannelConfig::explicit_pattern(e->bits);
        for (uint32_t i = 0; i < cb16.size(); ++i) {
            const LinkResult link = run_link(cb16, DataWord{i}, cfg);
            require(link.outcome == decode(cb16, link.received),
                    "link and library outcomes differ at n = 16, pattern " +
                        e->bits.to_string());
        }
    }
}

// ---------------------------------------------------------------- criterion 9

void criterion_undetected_characterization() {
    for (unsigned n : {8u, 16u}) {
        const Codebook cb = Codebook::build(n);
        const uint64_t space = uint64_t{1} << n;
        for (uint32_t i = 0; i < cb.size(); ++i) {
            const Word c = cb.codeword(i);
            uint64_t undetected = 0;
            for (uint64_t e = 1; e < space; ++e) {
                const Word pattern(e, n);
                const bool exact =
                    decode(cb, c ^ pattern).kind == DecodeKind::exact_match;
                const bool is_codeword = cb.code_to_data(pattern).has_value();
                require(exact == is_codeword,
                        "undetected iff the pattern is a nonzero codeword (n = " +
                            std::to_string(n) + ")");
                undetected += exact;
            }
            require_eq(undetected, uint64_t{2 * n - 1},
                       "undetected count per codeword at n = " + std::to_string(n));
        }
        require_eq(undetected_pattern_census(cb), uint64_t{2 * n - 1},
                   "census route at n = " + std::to_string(n));
    }
}

// --------------------------------------------------------------- criterion 10

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"ocfec"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return ocfec::cli::run(int(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot reopen " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_cli_round_trip() {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("ocfec_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    struct Cleanup {
        fs::path dir;
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }
    } cleanup{dir};

    const unsigned lengths[] = {8, 16, 32, 64};
    SplitMix64 rng(606);
    for (int i = 0; i < 100; ++i) {
        const size_t size = i == 0 ? 0 : size_t(rng.next() % 65537);
        std::string payload(size, '\0');
        for (auto& b : payload)
            b = char(rng.next() & 0xFF);

        const std::string plain = (dir / "plain.bin").string();
        const std::string framed = (dir / "framed.ocf").string();
        const std::string restored = (dir / "restored.bin").string();
        {
            std::ofstream out(plain, std::ios::binary | std::ios::trunc);
            out.write(payload.data(), std::streamsize(payload.size()));
            require(out.good(), "cannot write test payload");
        }

        const std::string n = std::to_string(lengths[i % 4]);
        require(run_cli({"encode", "--n", n, "--in", plain, "--out", framed}) == 0,
                "encode exit status");
        require(run_cli({"decode", "--in", framed, "--out", restored}) == 0,
                "decode exit status");
        require(slurp(restored) == payload,
                "file " + std::to_string(i) + " (n = " + n + ", " +
                    std::to_string(size) + " bytes) must round trip byte-identical");
    }

    // Deterministic CSV under a fixed seed.
    const std::string csv1 = (dir / "r1.csv").string();
    const std::string csv2 = (dir / "r2.csv").string();
    require(run_cli({"transmit", "--n", "16", "--count", "500", "--flip-prob",
                     "0.02", "--seed", "99", "--out", csv1}) >= 0,
            "transmit run 1");
    require(run_cli({"transmit", "--n", "16", "--count", "500", "--flip-prob",
                     "0.02", "--seed", "99", "--out", csv2}) >= 0,
            "transmit run 2");
    require(slurp(csv1) == slurp(csv2), "fixed-seed transmit CSV must be identical");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"codebook golden table (n = 8)", criterion_codebook_golden},
        {"threshold and radius arithmetic", criterion_parameter_arithmetic},
        {"three-case decode golden suite", criterion_three_cases},
        {"correction guarantee sweeps", criterion_correction_guarantee},
        {"detection census", criterion_detection_census},
        {"parity-only baseline", criterion_parity_baseline},
        {"2n + 2 processing-cycle model", criterion_cycle_model},
        {"simulator/library equivalence", criterion_simulator_equivalence},
        {"undetected-error characterization", criterion_undetected_characterization},
        {"CLI round trip + deterministic CSV", criterion_cli_round_trip},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].second();
            std::printf("PASS  %2zu  %s\n", i + 1, criteria[i].first.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %2zu  %s: %s\n", i + 1, criteria[i].first.c_str(),
                        e.what());
        }
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
