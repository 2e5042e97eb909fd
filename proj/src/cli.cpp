// SPDX-License-Identifier: Apache-2.0

#include "ocfec/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ocfec/analysis.hpp"
#include "ocfec/channel.hpp"
#include "ocfec/codebook.hpp"
#include "ocfec/codec.hpp"
#include "ocfec/frame.hpp"
#include "ocfec/linksim.hpp"

namespace ocfec::cli {

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::runtime_error("read failure: " + path);
    return bytes;
}

void write_file(const std::string& path, const void* data, size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out.write(static_cast<const char*>(data), std::streamsize(size));
    if (!out)
        throw std::runtime_error("write failure: " + path);
}

/// Text goes to the given path, or stdout when the path is empty.
void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    write_file(path, text.data(), text.size());
}

Word parse_pattern(const std::string& bits, unsigned n) {
    const Word w = Word::from_string(bits);
    if (w.length() != n)
        throw std::runtime_error("--pattern length does not match --n");
    return w;
}

const std::map<std::string, DecodePolicy> kPolicyNames{
    {"conservative", DecodePolicy::conservative},
    {"accept-nearest", DecodePolicy::accept_nearest},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Flat key=value config support: every `key=value` line becomes `--key value`
// unless that flag was given explicitly (explicit flags win). Unknown keys
// surface as ordinary parse errors.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        return args;

    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);

    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line has an empty key: " + line);

        const std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0)
                given = true;
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"biorthogonal forward-error-control codec and link simulator"};
    app.name("ocfec");
    app.require_subcommand(1);

    int status = 0;
    std::string config_path;

    // codebook ------------------------------------------------------------
    auto* cmd_codebook = app.add_subcommand("codebook", "print the 2n codewords");
    unsigned cb_n = 8;
    std::string cb_out;
    cmd_codebook->add_option("--n", cb_n, "code length")->required();
    cmd_codebook->add_option("--out", cb_out, "output path (default stdout)");
    cmd_codebook->add_option("--config", config_path, "flat key=value config file");
    cmd_codebook->callback([&] {
        write_text(cb_out, Codebook::build(cb_n).dump());
    });

    // encode ---------------------------------------------------------------
    auto* cmd_encode = app.add_subcommand("encode", "encode a file into a framed codeword stream");
    unsigned enc_n = 8;
    std::string enc_in, enc_out;
    cmd_encode->add_option("--n", enc_n, "code length")->required();
    cmd_encode->add_option("--in", enc_in, "input file")->required();
    cmd_encode->add_option("--out", enc_out, "output file")->required();
    cmd_encode->add_option("--config", config_path, "flat key=value config file");
    cmd_encode->callback([&] {
        const Codebook cb = Codebook::build(enc_n);
        const auto payload = read_file(enc_in);
        const auto stream = frame::encode_stream(cb, payload);
        write_file(enc_out, stream.data(), stream.size());
    });

    // decode ---------------------------------------------------------------
    auto* cmd_decode = app.add_subcommand("decode", "decode a framed codeword stream");
    std::string dec_in, dec_out;
    unsigned dec_n = 0;
    DecodePolicy dec_policy = DecodePolicy::conservative;
    cmd_decode->add_option("--in", dec_in, "framed input file")->required();
    cmd_decode->add_option("--out", dec_out, "decoded output file")->required();
    cmd_decode->add_option("--n", dec_n, "expected code length (cross-checked against the header)");
    cmd_decode->add_option("--policy", dec_policy, "beyond-radius handling")
        ->transform(CLI::CheckedTransformer(kPolicyNames, CLI::ignore_case));
    cmd_decode->add_option("--config", config_path, "flat key=value config file");
    cmd_decode->callback([&] {
        const auto stream = read_file(dec_in);
        const frame::Header h = frame::read_header(stream);
        if (dec_n != 0 && dec_n != h.n)
            throw std::runtime_error("--n does not match the stream header");
        const auto decoded = frame::decode_stream(stream, dec_policy);
        write_file(dec_out, decoded.payload.data(), decoded.payload.size());
        std::fprintf(stderr,
                     "symbols=%llu exact=%llu corrected=%llu retransmit=%llu "
                     "beyond_radius=%llu markers=%llu\n",
                     (unsigned long long)h.symbol_count,
                     (unsigned long long)decoded.stats.exact,
                     (unsigned long long)decoded.stats.corrected,
                     (unsigned long long)decoded.stats.retransmit,
                     (unsigned long long)decoded.stats.beyond_radius,
                     (unsigned long long)decoded.stats.markers);
        if (decoded.stats.markers > 0)
            status = 1;
    });

    // transmit -------------------------------------------------------------
    auto* cmd_transmit = app.add_subcommand("transmit", "run symbols through the simulated link");
    unsigned tx_n = 8;
    uint64_t tx_count = 1000;
    double tx_p = 0.0;
    std::string tx_pattern;
    uint64_t tx_seed = 0;
    DecodePolicy tx_policy = DecodePolicy::conservative;
    std::string tx_out;
    cmd_transmit->add_option("--n", tx_n, "code length")->required();
    cmd_transmit->add_option("--count", tx_count, "symbols to transmit");
    auto* tx_p_opt = cmd_transmit->add_option("--flip-prob", tx_p, "iid bit-flip probability");
    auto* tx_pat_opt = cmd_transmit->add_option("--pattern", tx_pattern,
                                                "explicit n-bit error pattern per symbol");
    tx_p_opt->excludes(tx_pat_opt);
    cmd_transmit->add_option("--seed", tx_seed, "channel seed");
    cmd_transmit->add_option("--policy", tx_policy, "beyond-radius handling")
        ->transform(CLI::CheckedTransformer(kPolicyNames, CLI::ignore_case));
    cmd_transmit->add_option("--out", tx_out, "CSV report path (default stdout)");
    cmd_transmit->add_option("--config", config_path, "flat key=value config file");
    cmd_transmit->callback([&] {
        const Codebook cb = Codebook::build(tx_n);
        ChannelConfig cfg = tx_pattern.empty()
                                ? ChannelConfig::iid(tx_p, tx_seed)
                                : ChannelConfig::explicit_pattern(
                                      parse_pattern(tx_pattern, tx_n));

        uint64_t exact = 0, corrected = 0, retransmit = 0, beyond = 0, markers = 0;
        for (uint64_t i = 0; i < tx_count; ++i) {
            const DataWord d{uint32_t(i % cb.size())};
            const LinkResult res = run_link(cb, d, cfg, i, tx_policy);
            switch (res.outcome.kind) {
            case DecodeKind::exact_match: ++exact; break;
            case DecodeKind::corrected: ++corrected; break;
            case DecodeKind::retransmit: ++retransmit; break;
            case DecodeKind::nearest_beyond_radius: ++beyond; break;
            }
            if (requests_retransmit(res.outcome, tx_policy))
                ++markers;
        }

        ReportRow row;
        row.kind = "transmit";
        row.n = tx_n;
        row.total = tx_count;
        row.exact = exact;
        row.corrected = corrected;
        row.retransmit = retransmit;
        row.beyond_radius = beyond;
        row.mode = tx_pattern.empty() ? "iid" : "pattern";
        if (tx_pattern.empty())
            row.seed = tx_seed;
        write_text(tx_out, emit_report({&row, 1}));
        if (markers > 0)
            status = 1;
    });

    // tables ---------------------------------------------------------------
    auto* cmd_tables = app.add_subcommand(
        "tables", "correction capabilities and detection rates per code length");
    std::string tab_out;
    uint64_t tab_trials = 100000;
    uint64_t tab_seed = 1;
    cmd_tables->add_option("--out", tab_out, "CSV report path (default stdout)");
    cmd_tables->add_option("--trials", tab_trials, "trials for sampled entries");
    cmd_tables->add_option("--seed", tab_seed, "seed for sampled entries");
    cmd_tables->add_option("--config", config_path, "flat key=value config file");
    cmd_tables->callback([&] {
        const unsigned lengths[] = {8, 16, 32, 64};
        std::vector<ReportRow> rows;
        for (const CapabilityRow& r : capability_table(lengths, tab_trials, tab_seed))
            rows.push_back(to_row(r));
        rows.push_back(to_row(detection_census(Codebook::build(8))));
        rows.push_back(to_row(detection_census(Codebook::build(16))));
        rows.push_back(to_row(sampled_census(Codebook::build(32), tab_trials, tab_seed)));
        rows.push_back(parity_row(8, parity_baseline_rate(8)));
        rows.push_back(parity_row(16, parity_baseline_rate(16)));
        write_text(tab_out, emit_report(rows));
    });

    // census ---------------------------------------------------------------
    auto* cmd_census = app.add_subcommand("census", "decode-outcome census of the word space");
    unsigned cs_n = 8;
    uint64_t cs_trials = 0;
    uint64_t cs_seed = 1;
    std::string cs_out;
    cmd_census->add_option("--n", cs_n, "code length")->required();
    cmd_census->add_option("--trials", cs_trials, "sample this many words instead of enumerating");
    cmd_census->add_option("--seed", cs_seed, "seed for sampling");
    cmd_census->add_option("--out", cs_out, "CSV report path (default stdout)");
    cmd_census->add_option("--config", config_path, "flat key=value config file");
    cmd_census->callback([&] {
        const Codebook cb = Codebook::build(cs_n);
        const DetectionCensus census =
            cs_trials > 0 ? sampled_census(cb, cs_trials, cs_seed) : detection_census(cb);
        const ReportRow row = to_row(census);
        write_text(cs_out, emit_report({&row, 1}));
    });

    // sweep ----------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "correction sweep over error patterns");
    unsigned sw_n = 8;
    int sw_weight = -1;
    std::string sw_mode = "exhaustive";
    uint64_t sw_trials = 100000;
    uint64_t sw_seed = 1;
    uint64_t sw_budget = kDefaultSweepBudget;
    std::string sw_out;
    cmd_sweep->add_option("--n", sw_n, "code length")->required();
    cmd_sweep->add_option("--max-weight", sw_weight, "largest pattern weight (default t)");
    cmd_sweep->add_option("--mode", sw_mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd_sweep->add_option("--trials", sw_trials, "trials in sampled mode");
    cmd_sweep->add_option("--seed", sw_seed, "seed in sampled mode");
    cmd_sweep->add_option("--budget", sw_budget, "case budget for exhaustive mode");
    cmd_sweep->add_option("--out", sw_out, "CSV report path (default stdout)");
    cmd_sweep->add_option("--config", config_path, "flat key=value config file");
    cmd_sweep->callback([&] {
        const Codebook cb = Codebook::build(sw_n);
        const unsigned w = sw_weight < 0 ? cb.params().t : unsigned(sw_weight);
        const CorrectionSweepResult result =
            sw_mode == "sampled" ? sampled_sweep(cb, w, sw_trials, sw_seed)
                                 : correction_sweep(cb, w, sw_budget);
        const ReportRow row = to_row(result);
        write_text(sw_out, emit_report({&row, 1}));
    });

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

} // namespace ocfec::cli
