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

#include "blindtele/teleport.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace blindtele {

StateVector teleport_entangle(const StateVector &reg, int offset, const StateVector &resource) {
    const int n = reg.num_qubits();
    const int m = resource.num_qubits();
    if (m < 1 || offset < 0 || offset + m > n) {
        throw std::invalid_argument("teleport: resource of " + std::to_string(m) + " qubits does not fit block at " +
                                    std::to_string(offset) + " of a " + std::to_string(n) + "-qubit register");
    }
    StateVector joint = tensor(reg, resource);
    for (int k = 0; k < m; ++k) {
        joint = apply_cnot(std::move(joint), n + k, offset + k);
    }
    return joint;
}

std::vector<int> teleport_measured_qubits(int offset, int block_qubits) {
    std::vector<int> qubits(static_cast<std::size_t>(block_qubits));
    for (int k = 0; k < block_qubits; ++k) {
        qubits[static_cast<std::size_t>(k)] = offset + k;
    }
    return qubits;
}

TeleportResult teleport_finish(MeasurementBranch branch, int offset, int block_qubits) {
    // Remaining order is [0, offset) ++ [offset + m, n) ++ R'; put R' back at offset.
    const int n = branch.state.num_qubits();
    const int m = block_qubits;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < offset) {
            order[static_cast<std::size_t>(i)] = i;
        } else if (i < offset + m) {
            order[static_cast<std::size_t>(i)] = n - m + (i - offset);
        } else {
            order[static_cast<std::size_t>(i)] = i - m;
        }
    }
    return {std::move(branch.bits), branch.probability, permute_qubits(branch.state, order)};
}

TeleportResult teleport_round(const StateVector &reg, const StateVector &resource, Rng &rng, int offset) {
    const auto joint = teleport_entangle(reg, offset, resource);
    const auto qubits = teleport_measured_qubits(offset, resource.num_qubits());
    return teleport_finish(measure_computational(joint, qubits, rng), offset, resource.num_qubits());
}

TeleportResult teleport_round_forced(const StateVector &reg, const StateVector &resource,
                                     std::span<const std::uint8_t> outcome, int offset) {
    const auto joint = teleport_entangle(reg, offset, resource);
    const auto qubits = teleport_measured_qubits(offset, resource.num_qubits());
    return teleport_finish(measure_forced(joint, qubits, outcome), offset, resource.num_qubits());
}

std::vector<TeleportResult> teleport_branches(const StateVector &reg, const StateVector &resource, int offset) {
    const auto joint = teleport_entangle(reg, offset, resource);
    const auto qubits = teleport_measured_qubits(offset, resource.num_qubits());
    std::vector<TeleportResult> out;
    for (auto &branch : measure_branches(joint, qubits)) {
        out.push_back(teleport_finish(std::move(branch), offset, resource.num_qubits()));
    }
    return out;
}

}  // namespace blindtele
