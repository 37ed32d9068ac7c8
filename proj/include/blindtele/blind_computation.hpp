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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blindtele/iterated.hpp"
#include "blindtele/key_ledger.hpp"
#include "blindtele/program.hpp"
#include "blindtele/session.hpp"
#include "blindtele/transcript.hpp"

namespace blindtele {

/// Alice's side of the blind computation.
///
/// Phase 1 sends Z_1 D_1 |+>^n with Z_1 a fresh pad on all n qubits. Every
/// later phase j teleports f_{j,p}(D_{j,p}) onto each block p through the
/// blind iterated protocol, recording the block's byproduct and final pad as
/// x_j and z_j. Bob's closing X-basis result is decrypted as o = m xor z_J.
///
/// Alice's working memory only keeps ledger entries that a later correction
/// or the decryption still reads; anything else is forgotten as soon as it
/// goes dead. An optional write-only copy keeps the full record.
class BlindClient {
  public:
    enum class Stage { Start, Rounds, AwaitFinal, Done };

    BlindClient(Program program, bool keep_record);

    Stage stage() const { return stage_; }
    int phase() const { return phase_; }
    int block() const { return block_; }
    int pad_bits() const;
    const Program &program() const { return *program_; }

    /// Parameters and the phase-1 state.
    std::vector<Message> start(const Bits &pads);
    StateVector prepare(const Bits &pads);
    void absorb(const Bits &outcome);
    void finish(const Bits &measured);

    /// Decrypted output o; valid once stage() is Done.
    const Bits &output() const { return output_; }
    const Bits &measured() const { return measured_; }
    const KeyLedger &memory() const { return working_; }
    /// Full key record (empty unless constructed with keep_record).
    const std::optional<KeyLedger> &record() const { return record_; }

    void append_fingerprint(std::string &out) const;

  private:
    void record_phase(int phase, Bits x_bits, Bits z_bits);
    void begin_phase(int phase);
    void begin_block(int block);
    /// Forgets every entry that no phase after `phase` reads.
    void prune(int phase);

    std::shared_ptr<const Program> program_;
    Stage stage_ = Stage::Start;
    int phase_ = 0;
    int block_ = 0;
    KeyLedger working_;
    std::optional<KeyLedger> record_;
    std::vector<DiagonalGate> corrections_;
    std::optional<IteratedSender> sender_;
    Bits phase_x_;
    Bits phase_z_;
    Bits measured_;
    Bits output_;
};

/// Bob's side: stores the phase-1 state, applies the CZ ladder (odd phases)
/// and Hadamard layers, runs one teleportation per received resource on the
/// current block, and measures every qubit in the X basis at the end. Bob
/// only ever sees the parameters and the messages.
class BlindServer {
  public:
    BlindServer() = default;

    void receive(const Message &message);
    bool awaiting_measurement() const { return joint_.has_value(); }
    int measurement_bits() const;
    std::vector<double> outcome_probabilities() const;
    ClassicalBits measure(const Bits &outcome, double &probability);
    bool finished() const { return finished_; }

    const StateVector &register_state() const { return reg_; }
    void append_fingerprint(std::string &out) const;

  private:
    void begin_phase();
    int block_offset() const { return (block_ - 1) * params_->m; }

    std::optional<ParamsMessage> params_;
    StateVector reg_;
    std::optional<StateVector> joint_;
    bool final_ = false;
    bool finished_ = false;
    int phase_ = 0;
    int block_ = 1;
    int round_ = 0;
};

struct BlindOptions {
    bool keep_payloads = false;
    /// Keep per-message transcript entries (counters are always kept).
    bool keep_entries = true;
    /// Keep Alice's full key record alongside her pruned working memory.
    bool keep_record = false;
};

class BlindComputationSession {
  public:
    explicit BlindComputationSession(Program program, BlindOptions options = {});

    Pending pending() const;
    void supply_pads(const Bits &pads);
    std::vector<double> outcome_probabilities() const { return bob_.outcome_probabilities(); }
    double supply_outcome(const Bits &outcome);
    std::string fingerprint() const;

    const BlindClient &alice() const { return alice_; }
    const BlindServer &bob() const { return bob_; }
    const Transcript &transcript() const { return channel_.transcript(); }

  private:
    void deliver();

    BlindClient alice_;
    BlindServer bob_;
    Channel channel_;
};

struct BlindResult {
    Bits output;
    Bits measured;
    Transcript transcript;
    KeyLedger ledger;
    double weight = 1.0;
};

BlindResult prot3_run(const Program &program, PadSource &pads, OutcomeSource &outcomes, bool keep_payloads = false);
/// Alice's pads come from the "alice" substream of `seed`, Bob's outcomes
/// from the "bob" substream.
BlindResult prot3_run(const Program &program, std::uint64_t seed, bool keep_payloads = false);

/// Exact output distribution of the protocol, by enumerating every pad
/// assignment and measurement branch. Indexed like oracle_simulate.
std::vector<double> prot3_exact_distribution(const Program &program);

/// Sampled output histogram (counts per output) over `shots` seeded runs.
std::vector<std::uint64_t> prot3_histogram(const Program &program, std::uint64_t seed, std::uint64_t shots);

}  // namespace blindtele
