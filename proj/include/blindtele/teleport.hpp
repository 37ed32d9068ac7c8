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

#include <vector>

#include "blindtele/bits.hpp"
#include "blindtele/random.hpp"
#include "blindtele/state_vector.hpp"

namespace blindtele {

/// One gate-teleportation round on the block of m qubits starting at
/// `offset` of Bob's register R, consuming an m-qubit resource held in R'.
///
/// Circuit: CNOT from R' qubit k (control) to R qubit offset + k (target)
/// for every k, then a computational-basis measurement of the R block,
/// giving s. The register swap is implicit: the measured qubits are dropped
/// and R' takes their place. For a resource D|+>^m with D diagonal the block
/// ends in D X^s |psi>, and every s has probability exactly 2^-m.
struct TeleportResult {
    Bits outcome;
    double probability = 0.0;
    StateVector state;
};

/// R (x) R' after the transversal CNOTs, i.e. just before measurement.
StateVector teleport_entangle(const StateVector &reg, int offset, const StateVector &resource);
/// Joint-state qubits holding the R block.
std::vector<int> teleport_measured_qubits(int offset, int block_qubits);
/// Moves R' into the measured block's place after a measurement branch.
TeleportResult teleport_finish(MeasurementBranch branch, int offset, int block_qubits);

TeleportResult teleport_round(const StateVector &reg, const StateVector &resource, Rng &rng, int offset = 0);
TeleportResult teleport_round_forced(const StateVector &reg, const StateVector &resource,
                                     std::span<const std::uint8_t> outcome, int offset = 0);
/// Every outcome with its exact Born weight.
std::vector<TeleportResult> teleport_branches(const StateVector &reg, const StateVector &resource, int offset = 0);

}  // namespace blindtele
