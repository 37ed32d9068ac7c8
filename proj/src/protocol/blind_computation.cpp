// Copyright 2026 The blindtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blindtele/blind_computation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "blindtele/oracle.hpp"
#include "blindtele/teleport.hpp"

namespace blindtele {

namespace {

using Kind = KeyLedger::Kind;

Bits zeros(int n) { return Bits(static_cast<std::size_t>(n), 0); }

void append_gate(std::string &out, const DiagonalGate &gate) {
    out += "g" + std::to_string(gate.level()) + ":";
    for (std::uint64_t r : gate.numerators()) {
        out += std::to_string(r);
        out.push_back(',');
    }
}

std::vector<int> all_qubits(int n) {
    std::vector<int> q(static_cast<std::size_t>(n));
    std::iota(q.begin(), q.end(), 0);
    return q;
}

}  // namespace

BlindClient::BlindClient(Program program, bool keep_record)
    : program_(std::make_shared<const Program>(std::move(program))) {
    program_->validate();
    working_ = KeyLedger(program_->n);
    if (keep_record) {
        record_ = KeyLedger(program_->n);
    }
}

int BlindClient::pad_bits() const {
    switch (stage_) {
    case Stage::Start:
        return program_->n;
    case Stage::Rounds:
        return sender_->pad_bits();
    default:
        return 0;
    }
}

std::vector<Message> BlindClient::start(const Bits &pads) {
    if (stage_ != Stage::Start) {
        throw ProtocolError("the computation has already started");
    }
    if (static_cast<int>(pads.size()) != program_->n) {
        throw std::invalid_argument("phase 1 needs one pad bit per qubit");
    }
    StateVector state = apply_phase_gates(StateVector::plus(program_->n), *program_, 1);
    state = apply_pauli(std::move(state), PauliString::z_string(pads));
    record_phase(1, zeros(program_->n), pads);
    stage_ = Stage::Rounds;
    begin_phase(2);
    return {ParamsMessage{program_->J, program_->n, program_->m, program_->x}, QuantumPayload{std::move(state)}};
}

StateVector BlindClient::prepare(const Bits &pads) {
    if (stage_ != Stage::Rounds) {
        throw ProtocolError("no resource is due");
    }
    return sender_->prepare(pads);
}

void BlindClient::absorb(const Bits &outcome) {
    if (stage_ != Stage::Rounds) {
        throw ProtocolError("no teleportation round is in flight");
    }
    sender_->absorb(outcome);
    if (!sender_->finished()) {
        return;
    }
    const auto offset = static_cast<std::ptrdiff_t>((block_ - 1) * program_->m);
    std::copy(sender_->byproduct_bits().begin(), sender_->byproduct_bits().end(), phase_x_.begin() + offset);
    std::copy(sender_->key_bits().begin(), sender_->key_bits().end(), phase_z_.begin() + offset);
    if (block_ < program_->blocks()) {
        begin_block(block_ + 1);
        return;
    }
    record_phase(phase_, std::move(phase_x_), std::move(phase_z_));
    prune(phase_);
    if (phase_ < program_->J) {
        begin_phase(phase_ + 1);
    } else {
        sender_.reset();
        corrections_.clear();
        stage_ = Stage::AwaitFinal;
    }
}

void BlindClient::finish(const Bits &measured) {
    if (stage_ != Stage::AwaitFinal) {
        throw ProtocolError("final result arrived before the last phase ended");
    }
    output_ = xor_bits(measured, working_.bits(Kind::Z, program_->J));
    measured_ = measured;
    working_ = KeyLedger(program_->n);
    stage_ = Stage::Done;
}

void BlindClient::record_phase(int phase, Bits x_bits, Bits z_bits) {
    if (record_) {
        record_->record(phase, x_bits, z_bits);
    }
    working_.record(phase, std::move(x_bits), std::move(z_bits));
}

void BlindClient::begin_phase(int phase) {
    phase_ = phase;
    corrections_.clear();
    for (int p = 1; p <= program_->blocks(); ++p) {
        corrections_.push_back(block_correction(working_, phase, p, program_->gate(phase, p)));
    }
    prune(phase);
    phase_x_ = zeros(program_->n);
    phase_z_ = zeros(program_->n);
    begin_block(1);
}

void BlindClient::begin_block(int block) {
    block_ = block;
    sender_.emplace(corrections_[static_cast<std::size_t>(block - 1)], program_->x, true);
}

void BlindClient::prune(int phase) {
    auto live = [&](Kind kind, int source) {
        if (kind == Kind::Z && source == program_->J) {
            return true;
        }
        for (int later = phase + 1; later <= program_->J; ++later) {
            for (const auto &read : chi_zeta_reads(later)) {
                if (read.first == kind && read.second == source) {
                    return true;
                }
            }
        }
        return false;
    };
    for (int source : working_.phases()) {
        for (Kind kind : {Kind::X, Kind::Z}) {
            if (working_.holds(kind, source) && !live(kind, source)) {
                working_.forget(kind, source);
            }
        }
    }
}

void BlindClient::append_fingerprint(std::string &out) const {
    out += "A" + std::to_string(static_cast<int>(stage_));
    if (stage_ == Stage::Done) {
        out += to_string(output_);
        return;
    }
    out += "j" + std::to_string(phase_) + "p" + std::to_string(block_);
    working_.append_fingerprint(out);
    for (std::size_t p = static_cast<std::size_t>(block_); p < corrections_.size(); ++p) {
        append_gate(out, corrections_[p]);
    }
    if (sender_) {
        sender_->append_fingerprint(out);
    }
    out += to_string(phase_x_) + "/" + to_string(phase_z_);
}

void BlindServer::receive(const Message &message) {
    if (const auto *p = std::get_if<ParamsMessage>(&message)) {
        if (params_ || p->n < 1 || p->m < 1 || p->n % p->m != 0 || p->J < 2 || p->x < 1) {
            throw ProtocolError("unusable parameters");
        }
        params_ = *p;
        return;
    }
    const auto *q = std::get_if<QuantumPayload>(&message);
    if (q == nullptr || !params_) {
        throw ProtocolError("Bob expects parameters, then quantum states");
    }
    if (phase_ == 0) {
        if (q->qubits() != params_->n) {
            throw ProtocolError("phase-1 state has the wrong size");
        }
        reg_ = q->state;
        phase_ = 1;
        begin_phase();
        return;
    }
    if (joint_ || final_ || q->qubits() != params_->m) {
        throw ProtocolError("resource arrived out of turn");
    }
    joint_ = teleport_entangle(reg_, block_offset(), q->state);
}

void BlindServer::begin_phase() {
    ++phase_;
    block_ = 1;
    round_ = 0;
    if (phase_ > params_->J) {
        final_ = true;
        joint_ = apply_hadamard_all(reg_);
        return;
    }
    if (phase_ % 2 == 1) {
        reg_ = apply_cz_ladder(std::move(reg_));
    }
    reg_ = apply_hadamard_all(std::move(reg_));
}

int BlindServer::measurement_bits() const { return final_ ? params_->n : params_->m; }

std::vector<double> BlindServer::outcome_probabilities() const {
    if (!joint_) {
        throw ProtocolError("nothing to measure");
    }
    if (final_) {
        return joint_->probabilities();
    }
    return blindtele::outcome_probabilities(*joint_, teleport_measured_qubits(block_offset(), params_->m));
}

ClassicalBits BlindServer::measure(const Bits &outcome, double &probability) {
    if (!joint_) {
        throw ProtocolError("nothing to measure");
    }
    if (final_) {
        probability = measure_forced(*joint_, all_qubits(params_->n), outcome).probability;
        joint_.reset();
        reg_ = StateVector();
        finished_ = true;
        return {outcome};
    }
    const int m = params_->m;
    auto result =
        teleport_finish(measure_forced(*joint_, teleport_measured_qubits(block_offset(), m), outcome), block_offset(), m);
    joint_.reset();
    reg_ = std::move(result.state);
    probability = result.probability;
    if (++round_ == params_->x) {
        round_ = 0;
        if (++block_ > params_->n / m) {
            begin_phase();
        }
    }
    return {outcome};
}

void BlindServer::append_fingerprint(std::string &out) const {
    out += "B" + std::to_string(phase_) + "." + std::to_string(block_) + "." + std::to_string(round_);
    out += finished_ ? "f" : "-";
    if (finished_) {
        return;
    }
    // The joint state determines the register, which is its CNOT preimage.
    append_state_fingerprint(out, joint_ ? *joint_ : reg_);
}

BlindComputationSession::BlindComputationSession(Program program, BlindOptions options)
    : alice_(std::move(program), options.keep_record), channel_(options.keep_payloads, options.keep_entries) {
    const Program &p = alice_.program();
    if (p.n + p.m > StateVector::kMaxQubits) {
        throw SizeError("n + m = " + std::to_string(p.n + p.m) + " exceeds the simulator's " +
                        std::to_string(StateVector::kMaxQubits) + " qubits");
    }
}

Pending BlindComputationSession::pending() const {
    if (bob_.awaiting_measurement()) {
        return {Await::BobOutcome, bob_.measurement_bits()};
    }
    if (alice_.stage() == BlindClient::Stage::Done) {
        return {Await::Finished, 0};
    }
    return {Await::AlicePads, alice_.pad_bits()};
}

void BlindComputationSession::deliver() {
    while (auto message = channel_.receive(Direction::AliceToBob)) {
        bob_.receive(*message);
    }
}

void BlindComputationSession::supply_pads(const Bits &pads) {
    if (pending().what != Await::AlicePads) {
        throw ProtocolError("no pad draw is due");
    }
    if (alice_.stage() == BlindClient::Stage::Start) {
        for (auto &message : alice_.start(pads)) {
            channel_.send(Direction::AliceToBob, std::move(message));
        }
    } else {
        channel_.send(Direction::AliceToBob, QuantumPayload{alice_.prepare(pads)});
    }
    deliver();
}

double BlindComputationSession::supply_outcome(const Bits &outcome) {
    double probability = 0.0;
    channel_.send(Direction::BobToAlice, bob_.measure(outcome, probability));
    const auto reply = channel_.receive(Direction::BobToAlice);
    const Bits &bits = std::get<ClassicalBits>(*reply).bits;
    if (alice_.stage() == BlindClient::Stage::AwaitFinal) {
        alice_.finish(bits);
    } else {
        alice_.absorb(bits);
    }
    return probability;
}

std::string BlindComputationSession::fingerprint() const {
    std::string out;
    alice_.append_fingerprint(out);
    bob_.append_fingerprint(out);
    return out;
}

BlindResult prot3_run(const Program &program, PadSource &pads, OutcomeSource &outcomes, bool keep_payloads) {
    BlindComputationSession session(program, {.keep_payloads = keep_payloads, .keep_record = true});
    BlindResult r;
    r.weight = drive(session, pads, outcomes);
    r.output = session.alice().output();
    r.measured = session.alice().measured();
    r.transcript = session.transcript();
    r.ledger = *session.alice().record();
    return r;
}

BlindResult prot3_run(const Program &program, std::uint64_t seed, bool keep_payloads) {
    Rng alice = Rng::derive(seed, "alice");
    Rng bob = Rng::derive(seed, "bob");
    RandomPads pads(alice);
    SampledOutcomes outcomes(bob);
    return prot3_run(program, pads, outcomes, keep_payloads);
}

std::vector<double> prot3_exact_distribution(const Program &program) {
    const BlindComputationSession root(program, {.keep_entries = false});
    std::vector<double> dist(std::size_t{1} << program.n, 0.0);
    for (const auto &leaf : enumerate_merged(root)) {
        dist[to_mask(leaf.session.alice().output())] += leaf.weight;
    }
    return dist;
}

std::vector<std::uint64_t> prot3_histogram(const Program &program, std::uint64_t seed, std::uint64_t shots) {
    Rng alice = Rng::derive(seed, "alice");
    Rng bob = Rng::derive(seed, "bob");
    RandomPads pads(alice);
    SampledOutcomes outcomes(bob);
    std::vector<std::uint64_t> counts(std::size_t{1} << program.n, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        BlindComputationSession session(program, {.keep_entries = false});
        drive(session, pads, outcomes);
        ++counts[to_mask(session.alice().output())];
    }
    return counts;
}

}  // namespace blindtele
