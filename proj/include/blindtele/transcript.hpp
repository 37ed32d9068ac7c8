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
#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "blindtele/bits.hpp"
#include "blindtele/state_vector.hpp"

namespace blindtele {

/// Raised when a party breaks the message-flow rules of the channel.
struct ProtocolError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Direction { AliceToBob, BobToAlice };

/// Public size parameters; sent once, first, from Alice to Bob. The
/// single-gate protocols use J = 1, n = m and x = number of rounds.
struct ParamsMessage {
    int J = 0;
    int n = 0;
    int m = 0;
    int x = 0;
};

struct QuantumPayload {
    StateVector state;
    int qubits() const { return state.num_qubits(); }
};

struct ClassicalBits {
    Bits bits;
};

using Message = std::variant<ParamsMessage, QuantumPayload, ClassicalBits>;

struct TranscriptEntry {
    Direction direction = Direction::AliceToBob;
    enum class Kind { Params, Quantum, Classical } kind = Kind::Params;
    int qubits = 0;
    int bits = 0;
    /// Public classical content (parameters or measurement results).
    std::optional<ParamsMessage> params;
    Bits classical;
    /// Quantum payload, only when the transcript keeps payloads.
    std::optional<StateVector> payload;
};

/// Ordered record of every message with exact communication counts.
class Transcript {
  public:
    /// Without `keep_entries` only the running counters are maintained, which
    /// keeps copies cheap during branch enumeration.
    explicit Transcript(bool keep_payloads = false, bool keep_entries = true)
        : keep_payloads_(keep_payloads && keep_entries), keep_entries_(keep_entries) {}

    /// Appends a message; throws ProtocolError if its direction or position
    /// is not allowed (quantum only Alice->Bob, classical only Bob->Alice,
    /// parameters exactly once and first).
    void record(Direction direction, const Message &message);

    const std::vector<TranscriptEntry> &entries() const { return entries_; }
    long qubits_alice_to_bob() const { return qubits_a2b_; }
    long bits_bob_to_alice() const { return bits_b2a_; }
    bool keeps_payloads() const { return keep_payloads_; }
    bool keeps_entries() const { return keep_entries_; }
    long messages() const { return messages_; }

    /// Counts recomputed from the entries; equal to the running counters.
    /// Throws std::logic_error when entries are not kept.
    std::pair<long, long> recount() const;

    /// JSON lines: one object per message with seq, direction, type and size.
    void write_jsonl(std::ostream &out) const;

  private:
    bool keep_payloads_;
    bool keep_entries_;
    std::vector<TranscriptEntry> entries_;
    long messages_ = 0;
    long qubits_a2b_ = 0;
    long bits_b2a_ = 0;
};

/// Ordered, reliable channel between the two parties. Both machines run in
/// lock-step on one thread, so delivery never blocks.
class Channel {
  public:
    explicit Channel(bool keep_payloads = false, bool keep_entries = true)
        : transcript_(keep_payloads, keep_entries) {}

    void send(Direction direction, Message message);
    /// Next undelivered message for the receiving side of `direction`.
    std::optional<Message> receive(Direction direction);

    const Transcript &transcript() const { return transcript_; }

  private:
    Transcript transcript_;
    std::vector<Message> to_bob_;
    std::vector<Message> to_alice_;
};

}  // namespace blindtele
