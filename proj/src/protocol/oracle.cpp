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

#include "blindtele/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace blindtele {

StateVector apply_phase_gates(StateVector state, const Program &program, int phase) {
    for (int p = 1; p <= program.blocks(); ++p) {
        const auto diag = program.gate(phase, p).to_unitary_diag();
        state = apply_diagonal(std::move(state), diag, (p - 1) * program.m);
    }
    return state;
}

std::vector<double> oracle_simulate(const Program &program) {
    program.validate();
    StateVector state = apply_phase_gates(StateVector::plus(program.n), program, 1);
    for (int j = 2; j <= program.J; ++j) {
        if (j % 2 == 1) {
            state = apply_cz_ladder(std::move(state));
        }
        state = apply_phase_gates(apply_hadamard_all(std::move(state)), program, j);
    }
    return apply_hadamard_all(std::move(state)).probabilities();
}

double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sum += std::abs(p[i] - q[i]);
    }
    return 0.5 * sum;
}

}  // namespace blindtele
