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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blindtele/bits.hpp"
#include "blindtele/diagonal_gate.hpp"

namespace blindtele {

/// Alice's secret record of phase keys: x_{j,k} is the teleportation
/// byproduct X^{x_{j,k}} and z_{j,k} the pad Z^{z_{j,k}} left on qubit k after
/// phase j. Phases are 1-based, qubits 0-based. Entries for j < 1 and for
/// qubits outside the register read as 0.
///
/// An entry can be forgotten once no later step needs it; reading a
/// forgotten or not-yet-recorded entry throws std::logic_error rather than
/// returning a guess.
class KeyLedger {
  public:
    enum class Kind : std::uint8_t { X, Z };

    KeyLedger() = default;
    explicit KeyLedger(int num_qubits) : num_qubits_(num_qubits) {}

    int num_qubits() const { return num_qubits_; }
    void record(int phase, Bits x_bits, Bits z_bits);
    void forget(Kind kind, int phase);

    std::uint8_t x(int phase, int qubit) const { return get(Kind::X, phase, qubit); }
    std::uint8_t z(int phase, int qubit) const { return get(Kind::Z, phase, qubit); }
    std::uint8_t get(Kind kind, int phase, int qubit) const;
    bool holds(Kind kind, int phase) const;
    /// Recorded phases, with the entries still held.
    std::vector<int> phases() const;
    const Bits &bits(Kind kind, int phase) const;

    /// Bytes of every held entry, for memoization keys.
    void append_fingerprint(std::string &out) const;

  private:
    struct PhaseKeys {
        std::optional<Bits> x;
        std::optional<Bits> z;
    };
    int num_qubits_ = 0;
    std::map<int, PhaseKeys> phases_;
};

/// (chi_{j,k}, zeta_{j,k}) for phase j >= 2:
///   even j: chi = z_{j-1,k}
///           zeta = z_{j-2,k} + x_{j-1,k} + sum_{t=+-1} (z_{j-3,k+t} + x_{j-2,k+t})
///   odd j:  chi = z_{j-1,k} + sum_{t=+-1} (z_{j-2,k+t} + x_{j-1,k+t})
///           zeta = z_{j-2,k} + x_{j-1,k}
/// all mod 2. Neighbours follow the open CZ chain, so qubits 0 and n-1 have
/// a single neighbour.
std::pair<std::uint8_t, std::uint8_t> compute_chi_zeta(const KeyLedger &ledger, int phase, int qubit);

/// Ledger entries (kind, source phase) that compute_chi_zeta reads for
/// `phase`. Derived from the same term table as compute_chi_zeta.
std::vector<std::pair<KeyLedger::Kind, int>> chi_zeta_reads(int phase);

/// f_{j,p}(D) = (X^chi) D (Z^zeta X^chi) over the qubits of block p
/// (1-based), which span [(p-1)m, pm).
DiagonalGate block_correction(const KeyLedger &ledger, int phase, int block, const DiagonalGate &gate);

/// Correction for the variant with m = n and no CZ layers:
///   f_j(D) = H Z_{j-1} H D Z_{j-2} H X_{j-1} Z_{j-1} H,
/// i.e. chi = z_{j-1} and zeta = z_{j-2} + x_{j-1}.
DiagonalGate simplified_correction(const KeyLedger &ledger, int phase, const DiagonalGate &gate);

}  // namespace blindtele
