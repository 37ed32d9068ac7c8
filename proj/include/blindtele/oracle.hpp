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

#include "blindtele/program.hpp"
#include "blindtele/state_vector.hpp"

namespace blindtele {

/// Applies the tensor product of the phase's block gates D_{j,1..P}.
StateVector apply_phase_gates(StateVector state, const Program &program, int phase);

/// Direct simulation of the program's target circuit: D_1 on |+>^n, then for
/// j = 2..J the CZ ladder (odd j only), H on every qubit and D_j, and finally
/// an X-basis measurement. Returns the exact probability of every n-bit
/// output, indexed by its to_mask value.
std::vector<double> oracle_simulate(const Program &program);

/// Total-variation distance between two distributions of equal length.
double total_variation(const std::vector<double> &p, const std::vector<double> &q);

}  // namespace blindtele
