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

#include "blindtele/iterated.hpp"

#include <string>
#include <utility>

#include "blindtele/teleport.hpp"

namespace blindtele {

IteratedSender::IteratedSender(DiagonalGate gate, int rounds, bool blind)
    : gate_(std::move(gate)), rounds_(rounds), blind_(blind) {
    if (rounds < 1) {
        throw std::invalid_argument("iterated teleportation needs at least one round");
    }
    if (gate_.level() > rounds) {
        throw LevelOverflow("gate has level " + std::to_string(gate_.level()) + " but only " +
                            std::to_string(rounds) + " rounds");
    }
    prev_pad_.assign(static_cast<std::size_t>(gate_.num_qubits()), 0);
    acc_x_ = prev_pad_;
}

StateVector IteratedSender::prepare(const Bits &pads) {
    if (finished() || awaiting_outcome_) {
        throw ProtocolError("no resource is due");
    }
    if (static_cast<int>(pads.size()) != pad_bits()) {
        throw std::invalid_argument("expected " + std::to_string(pad_bits()) + " pad bits");
    }
    const int m = num_qubits();
    const Bits pad = blind_ ? pads : Bits(static_cast<std::size_t>(m), 0);
    const auto diag = gate_.to_unitary_diag();
    StateVector resource = apply_diagonal(StateVector::plus(m), diag);
    // Z_r Z_{r-1}: the new pad, and the previous one which it cancels.
    resource = apply_pauli(std::move(resource), PauliString::z_string(xor_bits(pad, prev_pad_)));
    prev_pad_ = pad;
    awaiting_outcome_ = true;
    return resource;
}

void IteratedSender::absorb(const Bits &outcome) {
    if (!awaiting_outcome_) {
        throw ProtocolError("outcome received with no round in flight");
    }
    gate_ = gate_.conjugate_update(to_mask(outcome));
    acc_x_ = xor_bits(acc_x_, outcome);
    ++completed_;
    awaiting_outcome_ = false;
}

void IteratedSender::append_fingerprint(std::string &out) const {
    out += "A" + std::to_string(completed_) + (awaiting_outcome_ ? "w" : "-") + (halted_ ? "h" : "-");
    out += "L" + std::to_string(gate_.level()) + ":";
    for (std::uint64_t r : gate_.numerators()) {
        out += std::to_string(r);
        out.push_back(',');
    }
    out += to_string(prev_pad_) + "/" + to_string(acc_x_);
}

IteratedServer::IteratedServer(StateVector reg, bool early_halt) : reg_(std::move(reg)), early_halt_(early_halt) {}

void IteratedServer::receive(const Message &message) {
    if (const auto *p = std::get_if<ParamsMessage>(&message)) {
        if (p->n != reg_.num_qubits() || p->m != reg_.num_qubits()) {
            throw ProtocolError("parameters do not match Bob's register");
        }
        params_ = *p;
        return;
    }
    const auto *q = std::get_if<QuantumPayload>(&message);
    if (q == nullptr) {
        throw ProtocolError("Bob only receives parameters and resources");
    }
    if (!params_ || joint_ || halted_) {
        throw ProtocolError("resource arrived out of turn");
    }
    if (++received_ > params_->x) {
        throw ProtocolError("more resources than announced rounds");
    }
    joint_ = teleport_entangle(reg_, 0, q->state);
}

std::vector<double> IteratedServer::outcome_probabilities() const {
    if (!joint_) {
        throw ProtocolError("nothing to measure");
    }
    return blindtele::outcome_probabilities(*joint_, teleport_measured_qubits(0, reg_.num_qubits()));
}

ClassicalBits IteratedServer::measure(const Bits &outcome, double &probability) {
    if (!joint_) {
        throw ProtocolError("nothing to measure");
    }
    const int m = reg_.num_qubits();
    auto result = teleport_finish(measure_forced(*joint_, teleport_measured_qubits(0, m), outcome), 0, m);
    joint_.reset();
    reg_ = std::move(result.state);
    probability = result.probability;
    if (early_halt_ && all_zero(outcome)) {
        halted_ = true;
    }
    return {outcome};
}

void IteratedServer::append_fingerprint(std::string &out) const {
    out += "B" + std::to_string(received_) + (halted_ ? "h" : "-");
    // The joint state determines the register, which is its CNOT preimage.
    append_state_fingerprint(out, joint_ ? *joint_ : reg_);
}

IteratedSession::IteratedSession(DiagonalGate gate, int rounds, StateVector psi, IteratedOptions options)
    : options_(options),
      alice_(std::move(gate), rounds, options.blind),
      bob_(std::move(psi), options.early_halt),
      channel_(options.keep_payloads) {
    if (bob_.register_state().num_qubits() != alice_.num_qubits()) {
        throw std::invalid_argument("input state and gate act on different numbers of qubits");
    }
    if (options.blind && options.early_halt) {
        throw std::invalid_argument("early halting would reveal when the gate is exhausted");
    }
}

Pending IteratedSession::pending() const {
    if (bob_.awaiting_measurement()) {
        return {Await::BobOutcome, alice_.num_qubits()};
    }
    if (alice_.finished()) {
        return {Await::Finished, 0};
    }
    return {Await::AlicePads, alice_.pad_bits()};
}

void IteratedSession::deliver() {
    while (auto message = channel_.receive(Direction::AliceToBob)) {
        bob_.receive(*message);
    }
}

void IteratedSession::supply_pads(const Bits &pads) {
    if (pending().what != Await::AlicePads) {
        throw ProtocolError("no pad draw is due");
    }
    if (!started_) {
        const int m = alice_.num_qubits();
        channel_.send(Direction::AliceToBob, ParamsMessage{1, m, m, alice_.rounds()});
        started_ = true;
    }
    channel_.send(Direction::AliceToBob, QuantumPayload{alice_.prepare(pads)});
    deliver();
}

double IteratedSession::supply_outcome(const Bits &outcome) {
    double probability = 0.0;
    channel_.send(Direction::BobToAlice, bob_.measure(outcome, probability));
    const auto reply = channel_.receive(Direction::BobToAlice);
    const Bits &bits = std::get<ClassicalBits>(*reply).bits;
    alice_.absorb(bits);
    outcomes_.push_back(bits);
    if (options_.early_halt && all_zero(bits)) {
        alice_.halt();
    }
    return probability;
}

std::string IteratedSession::fingerprint() const {
    std::string out;
    alice_.append_fingerprint(out);
    bob_.append_fingerprint(out);
    return out;
}

IteratedResult iterated_result(const IteratedSession &session, double weight) {
    IteratedResult r;
    const Bits zeros(static_cast<std::size_t>(session.alice().num_qubits()), 0);
    r.byproduct = PauliString(session.alice().byproduct_bits(), zeros);
    r.key = PauliString(zeros, session.alice().key_bits());
    r.final_state = session.bob().register_state();
    r.transcript = session.transcript();
    r.rounds = session.alice().completed_rounds();
    r.outcomes = session.outcomes();
    r.weight = weight;
    return r;
}

IteratedResult prot1_run(const DiagonalGate &gate, int rounds, const StateVector &psi, OutcomeSource &outcomes,
                         bool early_halt) {
    IteratedSession session(gate, rounds, psi, {.blind = false, .early_halt = early_halt});
    ScriptedPads no_pads;
    const double w = drive(session, no_pads, outcomes);
    return iterated_result(session, w);
}

IteratedResult prot2_run(const DiagonalGate &gate, int rounds, const StateVector &psi, PadSource &pads,
                         OutcomeSource &outcomes) {
    IteratedSession session(gate, rounds, psi, {.blind = true});
    const double w = drive(session, pads, outcomes);
    return iterated_result(session, w);
}

}  // namespace blindtele
