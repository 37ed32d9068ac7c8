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

#include "blindtele/random.hpp"

namespace blindtele {

/// Element of the family D_{m,L}: exp(i * sum_j theta_j Z^{j_1} (x) ... (x) Z^{j_m})
/// with theta_j = r_j * pi / 2^L.
///
/// The gate is stored as its exact integer "theta table" r_j, indexed by the
/// Z-string mask j (qubit 0 is the most significant bit of j). Gates are kept
/// canonical:
///   - r_0 = 0 (the identity term only contributes a global phase);
///   - 0 <= r_j < 2^L, since theta_j and theta_j + pi differ by a global sign;
///   - L is minimal, so not every r_j is even when L >= 1.
/// Canonical tables compare by integer equality. Distinct tables can still
/// describe the same unitary up to phase once m >= 2 (for example
/// Z1 * Z2 * Z1Z2 = I), so use same_unitary() to compare operators.
///
/// The second representation is the phase vector: the diagonal entry on |b>
/// is exp(i * pi * p(b) / 2^L) with p(b) = sum_j r_j (-1)^{popcount(j & b)},
/// an integer defined mod 2^{L+1}. The two are related by a Walsh-Hadamard
/// transform.
class DiagonalGate {
  public:
    static constexpr int kMaxQubits = 12;
    /// Numerators are held mod 2^{L+1} in 64-bit integers.
    static constexpr int kMaxLevel = 62;

    DiagonalGate() : DiagonalGate(1) {}
    /// Identity on `num_qubits` qubits.
    explicit DiagonalGate(int num_qubits);

    /// Canonicalizes an arbitrary integer table at the given level.
    /// `numerators` has 2^m entries; entry 0 is accepted and dropped.
    static DiagonalGate from_numerators(int num_qubits, int level, std::span<const std::int64_t> numerators);
    /// exp(i * pi * r / 2^level * Z^mask).
    static DiagonalGate single_term(int num_qubits, std::uint64_t mask, int level, std::int64_t numerator);
    /// Z^mask up to phase (a level-1 gate, or the identity for mask 0).
    static DiagonalGate z_string(int num_qubits, std::uint64_t mask);
    /// Every r_j uniform in [0, 2^level).
    static DiagonalGate random(int num_qubits, int level, Rng &rng);
    /// Inverse of real_phases(): recovers the table from real phases
    /// phi(b) = sum_j theta_j (-1)^{j.b} (not reduced mod 2 pi). Throws
    /// std::domain_error if some theta_j is not a multiple of pi / 2^level.
    static DiagonalGate from_real_phases(int num_qubits, int level, std::span<const double> phases);

    int num_qubits() const { return num_qubits_; }
    int level() const { return level_; }
    std::size_t size() const { return numerators_.size(); }
    std::uint64_t numerator(std::uint64_t mask) const { return numerators_.at(mask); }
    std::span<const std::uint64_t> numerators() const { return numerators_; }
    bool is_identity() const { return level_ == 0; }
    /// Membership in D_{m,t}.
    bool in_level(int t) const { return level_ <= t; }

    /// p(b) mod 2^{L+1}, in units of pi / 2^L.
    std::uint64_t phase_numerator(std::uint64_t basis) const;
    /// p(b) for every b, via an integer Walsh-Hadamard transform.
    std::vector<std::uint64_t> phase_numerators() const;
    /// phi(b) = sum_j theta_j (-1)^{j.b} as reals, without reduction.
    std::vector<double> real_phases() const;
    /// Diagonal entries exp(i * pi * p(b) / 2^L).
    std::vector<std::complex<double>> to_unitary_diag() const;

    /// X_a D X_a D^dagger with a = `flip_mask`. The result lies in D_{m,L-1}:
    /// r'_j = -r_j mod 2^{L-1} where popcount(j & a) is odd, 0 elsewhere.
    DiagonalGate conjugate_update(std::uint64_t flip_mask) const;
    /// X^chi D Z^zeta X^chi, which is diagonal with level <= max(L, 1).
    DiagonalGate correction_frame(std::uint64_t chi_mask, std::uint64_t zeta_mask) const;
    DiagonalGate dagger() const;
    /// Operator product a * b (diagonal gates commute).
    friend DiagonalGate compose(const DiagonalGate &a, const DiagonalGate &b);

    /// Equality of the operators up to global phase.
    bool same_unitary(const DiagonalGate &other) const;

    bool operator==(const DiagonalGate &) const = default;

  private:
    DiagonalGate(int num_qubits, int level, std::vector<std::uint64_t> numerators);
    void canonicalize();

    int num_qubits_;
    int level_;
    std::vector<std::uint64_t> numerators_;
};

DiagonalGate compose(const DiagonalGate &a, const DiagonalGate &b);

/// Every canonical gate of D_{m,L}, in increasing table order. There are
/// (2^L)^(2^m - 1) of them; guarded to tables of at most 2^20 entries.
std::vector<DiagonalGate> enumerate_gates(int num_qubits, int level);

}  // namespace blindtele
