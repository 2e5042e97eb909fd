// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_ANALYSIS_HPP
#define OCFEC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocfec/codebook.hpp"
#include "ocfec/codec.hpp"

namespace ocfec {

/// Word space beyond which exhaustive enumeration is refused.
constexpr unsigned kExhaustiveGuardBits = 24;

/// Default case budget for exhaustive correction sweeps.
constexpr uint64_t kDefaultSweepBudget = uint64_t{1} << 26;

/// Outcome tally of decoding received words against a codebook. An
/// "undetected" word is one indistinguishable from a valid codeword
/// (minimum count zero), the no-error case included.
struct DetectionCensus {
    unsigned n = 0;
    uint64_t total_words = 0;
    uint64_t exact = 0;
    uint64_t corrected = 0;
    uint64_t retransmit = 0;
    uint64_t beyond_radius = 0;
    bool sampled = false;
    uint64_t seed = 0;

    uint64_t undetected_as_valid() const { return exact; }
    double detection_rate() const {
        return double(total_words - exact) / double(total_words);
    }
};

/// Decodes every n-bit word. Refuses n above the exhaustive guard.
DetectionCensus detection_census(const Codebook& cb);

/// Seeded uniform sample of the word space, for lengths past the guard.
DetectionCensus sampled_census(const Codebook& cb, uint64_t trials, uint64_t seed);

struct CorrectionSweepResult {
    unsigned n = 0;
    unsigned max_weight = 0;
    uint64_t cases = 0;    // (codeword, pattern) pairs tested
    uint64_t failures = 0; // cases not corrected back to the original
    bool sampled = false;
    uint64_t seed = 0;
};

/// Every codeword x every pattern of weight 1..max_weight. A case passes
/// only when decode returns corrected with the original data and a distance
/// equal to the pattern weight. Throws when the case count exceeds the budget.
CorrectionSweepResult correction_sweep(const Codebook& cb, unsigned max_weight,
                                       uint64_t case_budget = kDefaultSweepBudget);

/// Seeded random cases: codeword index uniform, weight uniform in
/// [1, max_weight], positions uniform for that weight.
CorrectionSweepResult sampled_sweep(const Codebook& cb, unsigned max_weight,
                                    uint64_t trials, uint64_t seed);

/// Fraction of all 2^n words with odd parity: the share of error patterns a
/// parity-only receiver can see. Exhaustive; exactly 1/2 for every n.
double parity_baseline_rate(unsigned n);

/// Number of nonzero patterns that carry a codeword onto another codeword,
/// per base codeword. Verifies the count is identical for every codeword
/// (it is 2n - 1: the set is closed under XOR) and returns it.
uint64_t undetected_pattern_census(const Codebook& cb);

/// Correction capability per code length: t = n/4 - 1, certified by an
/// exhaustive sweep where the case count is desk-scale and by a seeded
/// sampled sweep otherwise.
struct CapabilityRow {
    unsigned n = 0;
    unsigned t = 0;
    uint64_t cases = 0;
    uint64_t failures = 0;
    bool sampled = false;
    uint64_t seed = 0;
};

std::vector<CapabilityRow> capability_table(std::span<const unsigned> lengths,
                                            uint64_t sampled_trials = 100000,
                                            uint64_t seed = 1);

/// One CSV row. Schema (header mandatory, missing fields empty):
/// kind,n,total,exact,corrected,retransmit,beyond_radius,detection_rate,
/// t,patterns_tested,failures,mode,seed
struct ReportRow {
    std::string kind;
    std::optional<unsigned> n;
    std::optional<uint64_t> total;
    std::optional<uint64_t> exact;
    std::optional<uint64_t> corrected;
    std::optional<uint64_t> retransmit;
    std::optional<uint64_t> beyond_radius;
    std::optional<double> detection_rate;
    std::optional<unsigned> t;
    std::optional<uint64_t> patterns_tested;
    std::optional<uint64_t> failures;
    std::optional<std::string> mode;
    std::optional<uint64_t> seed;
};

ReportRow to_row(const DetectionCensus& c);
ReportRow to_row(const CorrectionSweepResult& s);
ReportRow to_row(const CapabilityRow& r);
ReportRow parity_row(unsigned n, double rate);

/// Deterministic CSV document; rates with 4 decimal places. Throws
/// std::invalid_argument on an empty row set.
std::string emit_report(std::span<const ReportRow> rows);

} // namespace ocfec

#endif
