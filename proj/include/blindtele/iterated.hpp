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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blindtele/diagonal_gate.hpp"
#include "blindtele/pauli.hpp"
#include "blindtele/session.hpp"
#include "blindtele/state_vector.hpp"
#include "blindtele/transcript.hpp"

namespace blindtele {

/// The gate does not belong to D_{m,l} for the declared number of rounds l.
struct LevelOverflow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Alice's side of iterated teleportation of one gate D in D_{m,l}.
///
/// Round r (1-based) sends Z_r Z_{r-1} D_r |+>^m, where Z_r is the pad drawn
/// for that round (always identity when not blind) and Z_0 = I. On Bob's
/// outcome s the gate advances to D_{r+1} = X_s D_r X_s D_r^dagger, one
/// level lower, and X_s joins the accumulated byproduct.
class IteratedSender {
  public:
    IteratedSender(DiagonalGate gate, int rounds, bool blind);

    int num_qubits() const { return gate_.num_qubits(); }
    int rounds() const { return rounds_; }
    int completed_rounds() const { return completed_; }
    bool blind() const { return blind_; }
    bool finished() const { return halted_ || completed_ == rounds_; }
    bool awaiting_outcome() const { return awaiting_outcome_; }
    int pad_bits() const { return blind_ ? num_qubits() : 0; }

    StateVector prepare(const Bits &pads);
    void absorb(const Bits &outcome);
    /// Ends the protocol early (all-zero outcome under the early-halt rule).
    void halt() { halted_ = true; }

    /// The gate the next round will teleport.
    const DiagonalGate &current_gate() const { return gate_; }
    /// Bits of the accumulated byproduct X = prod_r X_r.
    const Bits &byproduct_bits() const { return acc_x_; }
    /// Bits of the final key Z_l: the pad of the last round sent.
    const Bits &key_bits() const { return prev_pad_; }

    void append_fingerprint(std::string &out) const;

  private:
    DiagonalGate gate_;
    int rounds_;
    bool blind_;
    int completed_ = 0;
    bool awaiting_outcome_ = false;
    bool halted_ = false;
    Bits prev_pad_;
    Bits acc_x_;
};

/// Bob's side of the single-gate protocols: owns register R and teleports
/// every received resource into it.
class IteratedServer {
  public:
    IteratedServer(StateVector reg, bool early_halt);

    void receive(const Message &message);
    bool awaiting_measurement() const { return joint_.has_value(); }
    int measurement_bits() const { return register_state().num_qubits(); }
    std::vector<double> outcome_probabilities() const;
    ClassicalBits measure(const Bits &outcome, double &probability);
    bool halted() const { return halted_; }

    const StateVector &register_state() const { return reg_; }
    void append_fingerprint(std::string &out) const;

  private:
    StateVector reg_;
    bool early_halt_;
    std::optional<ParamsMessage> params_;
    std::optional<StateVector> joint_;
    int received_ = 0;
    bool halted_ = false;
};

struct IteratedOptions {
    /// Pad every resource with fresh Z keys.
    bool blind = false;
    /// Stop as soon as Bob measures all zeros (single-gate, non-blind use).
    bool early_halt = false;
    bool keep_payloads = false;
};

/// Lock-step execution of iterated teleportation of `gate` over `rounds`
/// rounds onto Bob's input state `psi`.
class IteratedSession {
  public:
    IteratedSession(DiagonalGate gate, int rounds, StateVector psi, IteratedOptions options = {});

    Pending pending() const;
    void supply_pads(const Bits &pads);
    std::vector<double> outcome_probabilities() const { return bob_.outcome_probabilities(); }
    double supply_outcome(const Bits &outcome);
    std::string fingerprint() const;

    const IteratedSender &alice() const { return alice_; }
    const IteratedServer &bob() const { return bob_; }
    const Transcript &transcript() const { return channel_.transcript(); }
    const IteratedOptions &options() const { return options_; }
    /// Bob's announced outcomes, one per completed round.
    const std::vector<Bits> &outcomes() const { return outcomes_; }

  private:
    void deliver();

    IteratedOptions options_;
    IteratedSender alice_;
    IteratedServer bob_;
    Channel channel_;
    std::vector<Bits> outcomes_;
    bool started_ = false;
};

struct IteratedResult {
    /// X-type byproduct known to both parties.
    PauliString byproduct;
    /// Alice's Z key (identity without blinding).
    PauliString key;
    StateVector final_state;
    Transcript transcript;
    int rounds = 0;
    std::vector<Bits> outcomes;
    /// Probability of the realized outcome record.
    double weight = 1.0;
};

IteratedResult iterated_result(const IteratedSession &session, double weight = 1.0);

/// Iterated teleportation: ends with X D |psi> in Bob's register.
IteratedResult prot1_run(const DiagonalGate &gate, int rounds, const StateVector &psi, OutcomeSource &outcomes,
                         bool early_halt = false);
/// Blind iterated teleportation: ends with Z X D |psi>, Z known only to Alice.
IteratedResult prot2_run(const DiagonalGate &gate, int rounds, const StateVector &psi, PadSource &pads,
                         OutcomeSource &outcomes);

}  // namespace blindtele
