// SPDX-License-Identifier: Apache-2.0

#include "ocfec/analysis.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

#include "ocfec/channel.hpp"

namespace ocfec {

namespace {

void tally(DetectionCensus& census, const DecodeResult& r) {
    switch (r.kind) {
    case DecodeKind::exact_match: ++census.exact; break;
    case DecodeKind::corrected: ++census.corrected; break;
    case DecodeKind::retransmit: ++census.retransmit; break;
    case DecodeKind::nearest_beyond_radius: ++census.beyond_radius; break;
    }
}

} // namespace

DetectionCensus detection_census(const Codebook& cb) {
    const unsigned n = cb.params().n;
    if (n > kExhaustiveGuardBits)
        throw std::invalid_argument(
            "word space too large to enumerate; use sampled_census");

    DetectionCensus census;
    census.n = n;
    census.total_words = uint64_t{1} << n;
    for (uint64_t w = 0; w < census.total_words; ++w)
        tally(census, decode(cb, Word(w, n)));
    return census;
}

DetectionCensus sampled_census(const Codebook& cb, uint64_t trials, uint64_t seed) {
    if (trials == 0)
        throw std::invalid_argument("sampled census needs at least one trial");
    const unsigned n = cb.params().n;
    const uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    DetectionCensus census;
    census.n = n;
    census.total_words = trials;
    census.sampled = true;
    census.seed = seed;
    SplitMix64 rng(seed);
    for (uint64_t i = 0; i < trials; ++i)
        tally(census, decode(cb, Word(rng.next() & mask, n)));
    return census;
}

namespace {

bool case_corrected(const Codebook& cb, uint32_t data, const ErrorPattern& e) {
    const Word received = apply_pattern(cb.codeword(data), e);
    const DecodeResult r = decode(cb, received);
    return r.kind == DecodeKind::corrected && r.data.value == data &&
           r.distance == e.weight;
}

} // namespace

CorrectionSweepResult correction_sweep(const Codebook& cb, unsigned max_weight,
                                       uint64_t case_budget) {
    const unsigned n = cb.params().n;
    if (max_weight > n)
        throw std::invalid_argument("max_weight exceeds the code length");

    const uint64_t patterns = pattern_count(n, max_weight) - 1; // weight >= 1
    const uint64_t cases = patterns * cb.size();
    if (cases > case_budget)
        throw std::invalid_argument(
            "exhaustive sweep case count exceeds the budget; use sampled_sweep");

    CorrectionSweepResult result;
    result.n = n;
    result.max_weight = max_weight;

    PatternEnumerator gen(n, max_weight);
    while (auto e = gen.next()) {
        if (e->weight == 0)
            continue;
        for (uint32_t data = 0; data < cb.size(); ++data) {
            ++result.cases;
            if (!case_corrected(cb, data, *e))
                ++result.failures;
        }
    }
    return result;
}

CorrectionSweepResult sampled_sweep(const Codebook& cb, unsigned max_weight,
                                    uint64_t trials, uint64_t seed) {
    const unsigned n = cb.params().n;
    if (max_weight < 1 || max_weight > n)
        throw std::invalid_argument("sampled sweep needs max_weight in [1, n]");
    if (trials == 0)
        throw std::invalid_argument("sampled sweep needs at least one trial");

    CorrectionSweepResult result;
    result.n = n;
    result.max_weight = max_weight;
    result.sampled = true;
    result.seed = seed;

    SplitMix64 rng(seed);
    for (uint64_t i = 0; i < trials; ++i) {
        const auto data = uint32_t(rng.next() % cb.size());
        const unsigned w = 1 + unsigned(rng.next() % max_weight);
        const ErrorPattern e = random_pattern_of_weight(n, w, rng);
        ++result.cases;
        if (!case_corrected(cb, data, e))
            ++result.failures;
    }
    return result;
}

double parity_baseline_rate(unsigned n) {
    if (n < 1 || n > kExhaustiveGuardBits)
        throw std::invalid_argument("length outside the exhaustive guard");
    const uint64_t total = uint64_t{1} << n;
    uint64_t odd = 0;
    for (uint64_t w = 0; w < total; ++w)
        odd += unsigned(std::popcount(w)) & 1u;
    return double(odd) / double(total);
}

uint64_t undetected_pattern_census(const Codebook& cb) {
    const unsigned n = cb.params().n;
    if (n > kExhaustiveGuardBits)
        throw std::invalid_argument("word space too large to enumerate");

    const uint64_t total = uint64_t{1} << n;
    std::optional<uint64_t> per_codeword;
    for (uint32_t i = 0; i < cb.size(); ++i) {
        const Word c = cb.codeword(i);
        uint64_t count = 0;
        for (uint64_t e = 1; e < total; ++e)
            if (cb.code_to_data(c ^ Word(e, n)).has_value())
                ++count;
        if (per_codeword && *per_codeword != count)
            throw std::logic_error("undetected-pattern count differs across codewords");
        per_codeword = count;
    }
    return *per_codeword;
}

std::vector<CapabilityRow> capability_table(std::span<const unsigned> lengths,
                                            uint64_t sampled_trials, uint64_t seed) {
    std::vector<CapabilityRow> rows;
    rows.reserve(lengths.size());
    for (const unsigned n : lengths) {
        const Codebook cb = Codebook::build(n);
        const unsigned t = cb.params().t;
        CapabilityRow row;
        row.n = n;
        row.t = t;
        const uint64_t exhaustive_cases = (pattern_count(n, t) - 1) * cb.size();
        if (exhaustive_cases <= kDefaultSweepBudget && n <= 16) {
            const auto sweep = correction_sweep(cb, t);
            row.cases = sweep.cases;
            row.failures = sweep.failures;
        } else {
            const auto sweep = sampled_sweep(cb, t, sampled_trials, seed);
            row.cases = sweep.cases;
            row.failures = sweep.failures;
            row.sampled = true;
            row.seed = seed;
        }
        rows.push_back(row);
    }
    return rows;
}

ReportRow to_row(const DetectionCensus& c) {
    ReportRow row;
    row.kind = "census";
    row.n = c.n;
    row.total = c.total_words;
    row.exact = c.exact;
    row.corrected = c.corrected;
    row.retransmit = c.retransmit;
    row.beyond_radius = c.beyond_radius;
    row.detection_rate = c.detection_rate();
    row.mode = c.sampled ? "sampled" : "exhaustive";
    if (c.sampled)
        row.seed = c.seed;
    return row;
}

ReportRow to_row(const CorrectionSweepResult& s) {
    ReportRow row;
    row.kind = "sweep";
    row.n = s.n;
    row.t = s.max_weight;
    row.patterns_tested = s.cases;
    row.failures = s.failures;
    row.mode = s.sampled ? "sampled" : "exhaustive";
    if (s.sampled)
        row.seed = s.seed;
    return row;
}

ReportRow to_row(const CapabilityRow& r) {
    ReportRow row;
    row.kind = "capability";
    row.n = r.n;
    row.t = r.t;
    row.patterns_tested = r.cases;
    row.failures = r.failures;
    row.mode = r.sampled ? "sampled" : "exhaustive";
    if (r.sampled)
        row.seed = r.seed;
    return row;
}

ReportRow parity_row(unsigned n, double rate) {
    ReportRow row;
    row.kind = "parity";
    row.n = n;
    row.total = uint64_t{1} << n;
    row.detection_rate = rate;
    row.mode = "exhaustive";
    return row;
}

namespace {

void append_field(std::string& out, const std::optional<uint64_t>& v) {
    out += ',';
    if (v)
        out += std::to_string(*v);
}

void append_field(std::string& out, const std::optional<unsigned>& v) {
    out += ',';
    if (v)
        out += std::to_string(*v);
}

void append_rate(std::string& out, const std::optional<double>& v) {
    out += ',';
    if (v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *v);
        out += buf;
    }
}

} // namespace

std::string emit_report(std::span<const ReportRow> rows) {
    if (rows.empty())
        throw std::invalid_argument("report has no rows");
    std::string out =
        "kind,n,total,exact,corrected,retransmit,beyond_radius,detection_rate,"
        "t,patterns_tested,failures,mode,seed\n";
    for (const ReportRow& r : rows) {
        out += r.kind;
        append_field(out, r.n);
        append_field(out, r.total);
        append_field(out, r.exact);
        append_field(out, r.corrected);
        append_field(out, r.retransmit);
        append_field(out, r.beyond_radius);
        append_rate(out, r.detection_rate);
        append_field(out, r.t);
        append_field(out, r.patterns_tested);
        append_field(out, r.failures);
        out += ',';
        if (r.mode)
            out += *r.mode;
        append_field(out, r.seed);
        out += '\n';
    }
    return out;
}

} // namespace ocfec
