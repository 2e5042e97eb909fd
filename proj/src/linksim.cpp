// SPDX-License-Identifier: Apache-2.0

#include "ocfec/linksim.hpp"

#include <bit>
#include <stdexcept>

namespace ocfec {

bool Transmitter::step() {
    if (!enabled_)
        throw std::logic_error("tx_step with EN low");
    if (done())
        throw std::logic_error("tx_step past the end of the codeword");
    return ortho_.bit(position_++);
}

void Receiver::clock_bit(bool bit) {
    if (phase_ != Phase::receiving)
        throw std::logic_error("serial bit supplied outside the receiving phase");
    shift_ = (shift_ << 1) | uint64_t(bit);
    ++bits_received_;
    if (bits_received_ == cb_->params().n)
        phase_ = Phase::comparing;
}

void Receiver::clock_tick() {
    switch (phase_) {
    case Phase::receiving:
        throw std::logic_error("tick before the receive register is full");
    case Phase::done:
        throw std::logic_error("tick after the receiver is done");
    case Phase::comparing: {
        const auto entries = cb_->raw();
        const auto d = unsigned(std::popcount(entries[lut_index_] ^ shift_));
        if (lut_index_ == 0 || d < min_count_) {
            min_count_ = d;
            argmin_ = lut_index_;
            ties_ = 1;
        } else if (d == min_count_) {
            ++ties_;
        }
        ++lut_index_;
        ++processing_cycles_;
        if (lut_index_ == cb_->size())
            phase_ = Phase::latching;
        break;
    }
    case Phase::latching: {
        ++processing_cycles_;
        ++latch_steps_;
        if (latch_steps_ == 1) {
            // Load cycle: resolve the winner per the decode contract.
            DecodeResult r;
            r.data = DataWord{argmin_};
            r.distance = min_count_;
            r.ties = ties_;
            if (min_count_ == 0)
                r.kind = DecodeKind::exact_match;
            else if (ties_ >= 2)
                r.kind = DecodeKind::retransmit;
            else if (min_count_ <= cb_->params().t)
                r.kind = DecodeKind::corrected;
            else
                r.kind = DecodeKind::nearest_beyond_radius;
            outcome_ = r;
        } else {
            // Output latch cycle.
            phase_ = Phase::done;
        }
        break;
    }
    }
}

std::optional<unsigned> Receiver::current_min() const {
    if (lut_index_ == 0)
        return std::nullopt;
    return min_count_;
}

std::optional<uint32_t> Receiver::current_best() const {
    if (lut_index_ == 0)
        return std::nullopt;
    return argmin_;
}

Word Receiver::received_word() const {
    if (bits_received_ < cb_->params().n)
        throw std::logic_error("receive register not full yet");
    return Word(shift_, cb_->params().n);
}

std::string Receiver::register_view() const {
    const unsigned n = cb_->params().n;
    std::string s(n, '-');
    for (unsigned i = 0; i < bits_received_; ++i)
        s[i] = ((shift_ >> (bits_received_ - 1 - i)) & 1) ? '1' : '0';
    return s;
}

const DecodeResult& Receiver::outcome() const {
    if (phase_ != Phase::done)
        throw std::logic_error("outcome read before the receiver is done");
    return *outcome_;
}

bool Receiver::req() const {
    if (phase_ != Phase::done)
        return false;
    return requests_retransmit(*outcome_, policy_);
}

std::string WaveformTrace::to_text() const {
    std::string out = "clk\tEN\ttxcode\trxcode\tcount\tortho\tdata\tREQ\n";
    for (const TraceRow& r : rows_) {
        out += std::to_string(r.clk);
        out += '\t';
        out += r.en ? '1' : '0';
        out += '\t';
        out += r.txcode;
        out += '\t';
        out += r.rxcode;
        out += '\t';
        out += r.count;
        out += '\t';
        out += r.ortho;
        out += '\t';
        out += r.data;
        out += '\t';
        out += r.req ? '1' : '0';
        out += '\n';
    }
    return out;
}

LinkResult run_link(const Codebook& cb, DataWord d, const ChannelConfig& cfg,
                    uint64_t sequence_index, DecodePolicy policy) {
    const unsigned n = cb.params().n;
    const Word codeword = encode(cb, d);

    Word pattern(0, n);
    if (cfg.mode == ChannelConfig::Mode::explicit_pattern) {
        if (cfg.pattern.length() != n)
            throw std::invalid_argument("channel pattern length does not match the code");
        pattern = cfg.pattern;
    } else {
        pattern = random_impair(codeword, cfg, sequence_index).second.bits;
    }

    Transmitter tx(codeword);
    Receiver rx(cb, policy);
    WaveformTrace trace;
    unsigned clk = 0;

    // Transfer: one serial bit per cycle, impaired in transit.
    for (unsigned i = 0; i < n; ++i, ++clk) {
        const bool sent = tx.step();
        rx.clock_bit(sent ^ pattern.bit(i));
        TraceRow row;
        row.clk = clk;
        row.en = true;
        row.txcode = sent ? "1" : "0";
        row.rxcode = rx.register_view();
        trace.push(row);
    }
    tx.set_enabled(false);

    // Processing: 2n comparison cycles, then load + output latch.
    while (rx.phase() != Receiver::Phase::done) {
        rx.clock_tick();
        TraceRow row;
        row.clk = clk++;
        row.en = false;
        row.rxcode = rx.register_view();
        if (const auto m = rx.current_min())
            row.count = std::to_string(*m);
        if (const auto b = rx.current_best())
            row.ortho = cb.codeword(*b).to_string();
        if (rx.phase() == Receiver::Phase::done) {
            const DecodeResult& out = rx.outcome();
            if (out.kind != DecodeKind::retransmit)
                row.data = Word(out.data.value, cb.params().k).to_string();
            row.req = rx.req();
        }
        trace.push(row);
    }

    return LinkResult{rx.outcome(), rx.received_word(), std::move(trace)};
}

} // namespace ocfec
