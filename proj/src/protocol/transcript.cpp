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

#include "blindtele/transcript.hpp"

#include <json.hpp>

namespace blindtele {

namespace {

const char *direction_name(Direction d) { return d == Direction::AliceToBob ? "alice->bob" : "bob->alice"; }

}  // namespace

void Transcript::record(Direction direction, const Message &message) {
    if (messages_ == 0 && !std::holds_alternative<ParamsMessage>(message)) {
        throw ProtocolError("first message must carry the parameters");
    }
    TranscriptEntry e;
    e.direction = direction;
    if (const auto *p = std::get_if<ParamsMessage>(&message)) {
        if (direction != Direction::AliceToBob || messages_ != 0) {
            throw ProtocolError("parameters must be the first message, from Alice to Bob");
        }
        e.kind = TranscriptEntry::Kind::Params;
        e.params = *p;
    } else if (const auto *q = std::get_if<QuantumPayload>(&message)) {
        if (direction != Direction::AliceToBob) {
            throw ProtocolError("quantum payloads only flow from Alice to Bob");
        }
        e.kind = TranscriptEntry::Kind::Quantum;
        e.qubits = q->qubits();
        if (keep_payloads_) {
            e.payload = q->state;
        }
        qubits_a2b_ += e.qubits;
    } else {
        const auto &c = std::get<ClassicalBits>(message);
        if (direction != Direction::BobToAlice) {
            throw ProtocolError("classical results only flow from Bob to Alice");
        }
        e.kind = TranscriptEntry::Kind::Classical;
        e.bits = static_cast<int>(c.bits.size());
        e.classical = c.bits;
        bits_b2a_ += e.bits;
    }
    ++messages_;
    if (keep_entries_) {
        entries_.push_back(std::move(e));
    }
}

std::pair<long, long> Transcript::recount() const {
    if (!keep_entries_) {
        throw std::logic_error("transcript kept counters only");
    }
    long q = 0;
    long b = 0;
    for (const auto &e : entries_) {
        if (e.direction == Direction::AliceToBob) {
            q += e.qubits;
        } else {
            b += e.bits;
        }
    }
    return {q, b};
}

void Transcript::write_jsonl(std::ostream &out) const {
    if (!keep_entries_) {
        throw std::logic_error("transcript kept counters only");
    }
    long seq = 0;
    for (const auto &e : entries_) {
        nlohmann::json line;
        line["seq"] = seq++;
        line["direction"] = direction_name(e.direction);
        switch (e.kind) {
        case TranscriptEntry::Kind::Params:
            line["type"] = "params";
            line["J"] = e.params->J;
            line["n"] = e.params->n;
            line["m"] = e.params->m;
            line["x"] = e.params->x;
            break;
        case TranscriptEntry::Kind::Quantum:
            line["type"] = "quantum";
            break;
        case TranscriptEntry::Kind::Classical:
            line["type"] = "classical";
            line["value"] = to_string(e.classical);
            break;
        }
        line["qubits"] = e.qubits;
        line["bits"] = e.bits;
        out << line.dump() << '\n';
    }
}

void Channel::send(Direction direction, Message message) {
    transcript_.record(direction, message);
    (direction == Direction::AliceToBob ? to_bob_ : to_alice_).push_back(std::move(message));
}

std::optional<Message> Channel::receive(Direction direction) {
    auto &queue = direction == Direction::AliceToBob ? to_bob_ : to_alice_;
    if (queue.empty()) {
        return std::nullopt;
    }
    Message m = std::move(queue.front());
    queue.erase(queue.begin());
    return m;
}

}  // namespace blindtele
