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

#include <Eigen/Dense>

#include "blindtele/diagonal_gate.hpp"
#include "blindtele/program.hpp"
#include "blindtele/state_vector.hpp"

namespace blindtele {

using DensityMatrix = Eigen::MatrixXcd;

/// Largest number of message qubits a view is built for; the view is a
/// 2^q x 2^q matrix and every key and branch is enumerated.
inline constexpr int kMaxViewQubits = 10;

/// Bob's averaged view of the blind iterated protocol: the joint density
/// matrix of every resource Alice sends (round 1 first), averaged over all
/// 2^{ml} pad assignments and every measurement branch with its exact
/// weight. Throws SizeError when m * rounds exceeds kMaxViewQubits.
DensityMatrix prot2_view(const DiagonalGate &gate, int rounds, const StateVector &psi);

/// Same for the blind computation: phase-1 state followed by every
/// resource. Throws SizeError when the messages exceed kMaxViewQubits.
DensityMatrix prot3_view(const Program &program);

DensityMatrix maximally_mixed(int num_qubits);

/// Half the sum of the absolute eigenvalues of a - b, both Hermitian.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Trace distance between Bob's averaged view and I / 2^{ml}.
double blindness_distance(const DiagonalGate &gate, int rounds, const StateVector &psi);
/// As above with |0...0> as Bob's input.
double blindness_distance(const DiagonalGate &gate, int rounds);

}  // namespace blindtele
