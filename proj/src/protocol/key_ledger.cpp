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

#include "blindtele/key_ledger.hpp"

#include <array>
#include <span>
#include <stdexcept>

namespace blindtele {

using Kind = KeyLedger::Kind;

void KeyLedger::record(int phase, Bits x_bits, Bits z_bits) {
    if (phase < 1) {
        throw std::invalid_argument("ledger phases start at 1");
    }
    if (static_cast<int>(x_bits.size()) != num_qubits_ || static_cast<int>(z_bits.size()) != num_qubits_) {
        throw std::invalid_argument("ledger entry width differs from register");
    }
    phases_[phase] = PhaseKeys{std::move(x_bits), std::move(z_bits)};
}

void KeyLedger::forget(Kind kind, int phase) {
    auto it = phases_.find(phase);
    if (it == phases_.end()) {
        return;
    }
    (kind == Kind::X ? it->second.x : it->second.z).reset();
    if (!it->second.x && !it->second.z) {
        phases_.erase(it);
    }
}

bool KeyLedger::holds(Kind kind, int phase) const {
    auto it = phases_.find(phase);
    return it != phases_.end() && (kind == Kind::X ? it->second.x : it->second.z).has_value();
}

const Bits &KeyLedger::bits(Kind kind, int phase) const {
    auto it = phases_.find(phase);
    const auto *entry = it == phases_.end() ? nullptr : (kind == Kind::X ? &it->second.x : &it->second.z);
    if (entry == nullptr || !entry->has_value()) {
        throw std::logic_error(std::string("ledger entry ") + (kind == Kind::X ? "x" : "z") + "_" +
                               std::to_string(phase) + " is not held");
    }
    return **entry;
}

std::uint8_t KeyLedger::get(Kind kind, int phase, int qubit) const {
    if (phase < 1 || qubit < 0 || qubit >= num_qubits_) {
        return 0;
    }
    return bits(kind, phase)[static_cast<std::size_t>(qubit)];
}

std::vector<int> KeyLedger::phases() const {
    std::vector<int> out;
    for (const auto &[j, _] : phases_) {
        out.push_back(j);
    }
    return out;
}

void KeyLedger::append_fingerprint(std::string &out) const {
    for (const auto &[j, keys] : phases_) {
        out.push_back('|');
        out += std::to_string(j);
        out.push_back(keys.x ? 'x' : '-');
        if (keys.x) {
            out += to_string(*keys.x);
        }
        out.push_back(keys.z ? 'z' : '-');
        if (keys.z) {
            out += to_string(*keys.z);
        }
    }
}

namespace {

/// One summand of chi or zeta: the `kind` bit of phase j - back, on the
/// qubit itself or summed over both chain neighbours.
struct Term {
    Kind kind;
    int back;
    bool neighbours;
};

struct Formula {
    std::span<const Term> chi;
    std::span<const Term> zeta;
};

constexpr std::array<Term, 1> kEvenChi{{{Kind::Z, 1, false}}};
constexpr std::array<Term, 4> kEvenZeta{{{Kind::Z, 2, false}, {Kind::X, 1, false}, {Kind::Z, 3, true}, {Kind::X, 2, true}}};
constexpr std::array<Term, 3> kOddChi{{{Kind::Z, 1, false}, {Kind::Z, 2, true}, {Kind::X, 1, true}}};
constexpr std::array<Term, 2> kOddZeta{{{Kind::Z, 2, false}, {Kind::X, 1, false}}};

Formula formula_for(int phase) {
    if (phase < 2) {
        throw std::invalid_argument("corrections are defined for phases j >= 2");
    }
    return phase % 2 == 0 ? Formula{kEvenChi, kEvenZeta} : Formula{kOddChi, kOddZeta};
}

std::uint8_t evaluate(std::span<const Term> terms, const KeyLedger &ledger, int phase, int k) {
    unsigned acc = 0;
    for (const Term &t : terms) {
        const int source = phase - t.back;
        if (t.neighbours) {
            acc += ledger.get(t.kind, source, k - 1) + ledger.get(t.kind, source, k + 1);
        } else {
            acc += ledger.get(t.kind, source, k);
        }
    }
    return static_cast<std::uint8_t>(acc & 1u);
}

}  // namespace

std::pair<std::uint8_t, std::uint8_t> compute_chi_zeta(const KeyLedger &ledger, int phase, int qubit) {
    const Formula f = formula_for(phase);
    return {evaluate(f.chi, ledger, phase, qubit), evaluate(f.zeta, ledger, phase, qubit)};
}

std::vector<std::pair<Kind, int>> chi_zeta_reads(int phase) {
    const Formula f = formula_for(phase);
    std::vector<std::pair<Kind, int>> out;
    for (auto terms : {f.chi, f.zeta}) {
        for (const Term &t : terms) {
            if (phase - t.back >= 1) {
                out.emplace_back(t.kind, phase - t.back);
            }
        }
    }
    return out;
}

DiagonalGate block_correction(const KeyLedger &ledger, int phase, int block, const DiagonalGate &gate) {
    const int m = gate.num_qubits();
    std::uint64_t chi = 0;
    std::uint64_t zeta = 0;
    for (int i = 0; i < m; ++i) {
        const auto [c, z] = compute_chi_zeta(ledger, phase, (block - 1) * m + i);
        chi = (chi << 1) | c;
        zeta = (zeta << 1) | z;
    }
    return gate.correction_frame(chi, zeta);
}

DiagonalGate simplified_correction(const KeyLedger &ledger, int phase, const DiagonalGate &gate) {
    if (gate.num_qubits() != ledger.num_qubits()) {
        throw std::invalid_argument("simplified correction needs m = n");
    }
    std::uint64_t chi = 0;
    std::uint64_t zeta = 0;
    for (int k = 0; k < gate.num_qubits(); ++k) {
        chi = (chi << 1) | ledger.z(phase - 1, k);
        zeta = (zeta << 1) | ((ledger.z(phase - 2, k) ^ ledger.x(phase - 1, k)) & 1u);
    }
    return gate.correction_frame(chi, zeta);
}

}  // namespace blindtele
