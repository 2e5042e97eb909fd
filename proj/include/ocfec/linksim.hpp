// SPDX-License-Identifier: Apache-2.0

#ifndef OCFEC_LINKSIM_HPP
#define OCFEC_LINKSIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocfec/channel.hpp"
#include "ocfec/codebook.hpp"
#include "ocfec/codec.hpp"
#include "ocfec/word.hpp"

namespace ocfec {

/// Transmitter shift register: emits the loaded codeword one bit per clock,
/// leftmost (index 0) bit first, while EN is high.
class Transmitter {
public:
    explicit Transmitter(Word codeword) : ortho_(codeword) {}

    const Word& loaded() const { return ortho_; }
    unsigned position() const { return position_; }
    bool enabled() const { return enabled_; }
    void set_enabled(bool en) { enabled_ = en; }
    bool done() const { return position_ == ortho_.length(); }

    /// Emits the bit at the current position and advances. Throws
    /// std::logic_error when EN is low or the codeword is fully serialized.
    bool step();

private:
    Word ortho_;
    unsigned position_ = 0;
    bool enabled_ = true;
};

/// Receiver state machine mirroring the lookup-table architecture:
///
///   receiving  n cycles   serial bits shift into the n-bit register
///   comparing  2n cycles  one XOR + ones-count per codebook entry,
///                         tracking the minimum count and its ties
///   latching   2 cycles   load the winner, latch the output
///   done                  outcome (and REQ) valid
///
/// The processing counter covers comparing + latching only: 2n + 2 cycles
/// for every word. The n receiving cycles are visible in the waveform trace
/// but accounted separately.
class Receiver {
public:
    enum class Phase : uint8_t { receiving, comparing, latching, done };

    explicit Receiver(const Codebook& cb,
                      DecodePolicy policy = DecodePolicy::conservative)
        : cb_(&cb), policy_(policy) {}

    Phase phase() const { return phase_; }
    unsigned bits_received() const { return bits_received_; }
    unsigned lut_index() const { return lut_index_; }
    unsigned processing_cycles() const { return processing_cycles_; }

    /// Feed one serial bit; receiving phase only.
    void clock_bit(bool bit);

    /// Advance one internal processing cycle; comparing/latching only.
    void clock_tick();

    /// Minimum count seen so far; empty before the first comparison.
    std::optional<unsigned> current_min() const;
    /// Entry index of the current best match; empty before the first comparison.
    std::optional<uint32_t> current_best() const;

    /// Received word; valid once the register is full.
    Word received_word() const;

    /// Register contents for tracing, unfilled positions as '-'.
    std::string register_view() const;

    /// Decode outcome; done phase only, throws std::logic_error before that.
    const DecodeResult& outcome() const;

    /// Retransmission request line; high in done phase for tie outcomes
    /// (and beyond-radius outcomes under the conservative policy).
    bool req() const;

private:
    const Codebook* cb_;
    DecodePolicy policy_;
    Phase phase_ = Phase::receiving;
    uint64_t shift_ = 0;
    unsigned bits_received_ = 0;
    unsigned lut_index_ = 0;
    unsigned min_count_ = 0;
    uint32_t argmin_ = 0;
    uint32_t ties_ = 0;
    unsigned latch_steps_ = 0;
    unsigned processing_cycles_ = 0;
    std::optional<DecodeResult> outcome_;
};

/// One row per clock cycle; '-' marks signals without a defined value yet.
struct TraceRow {
    unsigned clk = 0;
    bool en = false;
    std::string txcode = "-";
    std::string rxcode = "-";
    std::string count = "-";
    std::string ortho = "-";
    std::string data = "-";
    bool req = false;
};

class WaveformTrace {
public:
    void push(TraceRow row) { rows_.push_back(std::move(row)); }
    const std::vector<TraceRow>& rows() const { return rows_; }

    /// Tab-separated text, one line per cycle, fixed signal order:
    /// clk EN txcode rxcode count ortho data REQ.
    std::string to_text() const;

private:
    std::vector<TraceRow> rows_;
};

struct LinkResult {
    DecodeResult outcome;
    Word received;
    WaveformTrace trace;
};

/// End-to-end link: encode, serialize, impair each serial bit per the
/// channel, deserialize, decode. The outcome always equals codec decode
/// applied to the impaired parallel word; the trace covers every cycle
/// (n transfer + 2n compare + 2 latch rows).
LinkResult run_link(const Codebook& cb, DataWord d, const ChannelConfig& cfg,
                    uint64_t sequence_index = 0,
                    DecodePolicy policy = DecodePolicy::conservative);

} // namespace ocfec

#endif
