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

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "blindtele/bits.hpp"
#include "blindtele/pauli.hpp"
#include "blindtele/random.hpp"

namespace blindtele {

using Amplitude = std::complex<double>;

namespace detail {
struct StateAccess;
}

/// Thrown when a register would exceed StateVector::kMaxQubits.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Dense, normalized amplitude vector over q qubits.
///
/// Qubit 0 (written as qubit 1 in the math) is the most significant bit of the basis
/// index; every kernel, bit vector and CZ-ladder neighbour relation uses the
/// same order. Global phase is never tracked. States are plain values and
/// every operation below returns a new state.
class StateVector {
  public:
    static constexpr int kMaxQubits = 12;

    /// Zero-qubit register holding the scalar 1; what is left after every
    /// qubit of a register has been measured.
    StateVector();

    static StateVector zero(int num_qubits);
    /// |+>^q. Throws SizeError unless 1 <= q <= kMaxQubits.
    static StateVector plus(int num_qubits);
    static StateVector basis(int num_qubits, std::uint64_t index);
    /// Normalizes `amps`; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);
    /// Haar-like random state from normalized complex Gaussians.
    static StateVector random(int num_qubits, Rng &rng);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }
    double norm_squared() const;
    std::vector<double> probabilities() const;

  private:
    StateVector(int num_qubits, std::vector<Amplitude> amps);

    friend struct detail::StateAccess;

    int num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Applies `pauli` to qubits [offset, offset + pauli.num_qubits()).
StateVector apply_pauli(StateVector state, const PauliString &pauli, int offset = 0);
StateVector apply_hadamard_all(StateVector state);
/// Product of CZ(q, q+1) over q = 0 .. n-2; identity for n = 1.
StateVector apply_cz_ladder(StateVector state);
/// Multiplies qubits [offset, offset + log2(diag.size())) by a diagonal
/// operator given as its diagonal entries.
StateVector apply_diagonal(StateVector state, std::span<const Amplitude> diag, int offset = 0);
StateVector apply_cnot(StateVector state, int control, int target);
/// a (x) b: the qubits of b follow the qubits of a.
StateVector tensor(const StateVector &a, const StateVector &b);
/// New qubit i is old qubit order[i]; `order` is a permutation.
StateVector permute_qubits(const StateVector &state, std::span<const int> order);

struct MeasurementBranch {
    Bits bits;
    double probability = 0.0;
    /// Post-measurement state of the unmeasured qubits, renormalized, in
    /// their original relative order.
    StateVector state;
};

/// Born probabilities of every outcome on `qubits`, indexed by the outcome
/// packed with to_mask (first listed qubit most significant).
std::vector<double> outcome_probabilities(const StateVector &state, std::span<const int> qubits);

/// Sampled computational-basis measurement of `qubits`.
MeasurementBranch measure_computational(const StateVector &state, std::span<const int> qubits, Rng &rng);
/// Forced-outcome mode: collapses onto `bits` and reports its Born weight.
/// Throws std::domain_error for a zero-probability outcome.
MeasurementBranch measure_forced(const StateVector &state, std::span<const int> qubits,
                                 std::span<const std::uint8_t> bits);
/// Every outcome whose probability exceeds kBranchCutoff, with its weight.
std::vector<MeasurementBranch> measure_branches(const StateVector &state, std::span<const int> qubits);
inline constexpr double kBranchCutoff = 1e-14;

/// X-basis measurement of every qubit: H on all qubits, then measure.
Bits measure_x_all(const StateVector &state, Rng &rng);

/// |<a|b>|^2. Throws std::invalid_argument on a dimension mismatch.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

}  // namespace blindtele
