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

// Amplitude-array kernels. Every kernel exists twice with the same
// signature: `serial` is the reference, `omp` splits the independent inner
// loops across OpenMP threads. Both perform the same floating point
// operations per element in the same order, so their outputs are bitwise
// identical.
//
// Indexing: qubit q of an n-qubit register is bit (n - 1 - q) of the basis
// index, i.e. qubit 0 is the most significant bit.

#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace blindtele::kernels {

using Amplitude = std::complex<double>;

namespace serial {
// Normalized Walsh-Hadamard transform, i.e. H on every qubit.
void walsh_hadamard(std::span<Amplitude> amps);
// Unnormalized butterflies over real and (wrapping) integer tables.
void walsh_hadamard(std::span<double> values);
void walsh_hadamard(std::span<std::int64_t> values);
// Multiplies the `block_qubits` qubits starting at `offset` by diag.
void multiply_diagonal(std::span<Amplitude> amps, int num_qubits, int offset, int block_qubits,
                       std::span<const Amplitude> diag);
// Product of CZ(q, q+1) over the open chain.
void cz_ladder(std::span<Amplitude> amps, int num_qubits);
// X^x Z^z with masks in basis-index space (Z acts first).
void apply_pauli(std::span<Amplitude> amps, std::uint64_t x_mask, std::uint64_t z_mask);
void cnot(std::span<Amplitude> amps, int num_qubits, int control, int target);
void probabilities(std::span<const Amplitude> amps, std::span<double> out);
}  // namespace serial

namespace omp {
// Normalized Walsh-Hadamard transform, i.e. H on every qubit.
void walsh_hadamard(std::span<Amplitude> amps);
// Unnormalized butterflies over real and (wrapping) integer tables.
void walsh_hadamard(std::span<double> values);
void walsh_hadamard(std::span<std::int64_t> values);
// Multiplies the `block_qubits` qubits starting at `offset` by diag.
void multiply_diagonal(std::span<Amplitude> amps, int num_qubits, int offset, int block_qubits,
                       std::span<const Amplitude> diag);
// Product of CZ(q, q+1) over the open chain.
void cz_ladder(std::span<Amplitude> amps, int num_qubits);
// X^x Z^z with masks in basis-index space (Z acts first).
void apply_pauli(std::span<Amplitude> amps, std::uint64_t x_mask, std::uint64_t z_mask);
void cnot(std::span<Amplitude> amps, int num_qubits, int control, int target);
void probabilities(std::span<const Amplitude> amps, std::span<double> out);
}  // namespace omp

/// Registers at or above this many amplitudes use the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 11;

}  // namespace blindtele::kernels
