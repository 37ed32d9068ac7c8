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

#include "blindtele/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "blindtele/kernels.hpp"

namespace blindtele {

namespace detail {

struct StateAccess {
    static StateVector make(int num_qubits, std::vector<Amplitude> amps) {
        return StateVector(num_qubits, std::move(amps));
    }
    static std::span<Amplitude> data(StateVector &s) { return s.amps_; }
};

}  // namespace detail

namespace {

using detail::StateAccess;

bool use_parallel(std::size_t dim) { return dim >= kernels::kParallelThreshold; }

void check_qubit_count(int num_qubits, int lowest) {
    if (num_qubits < lowest || num_qubits > StateVector::kMaxQubits) {
        throw SizeError("register of " + std::to_string(num_qubits) + " qubits outside [" +
                        std::to_string(lowest) + ", " + std::to_string(StateVector::kMaxQubits) + "]");
    }
}

void check_qubits(const StateVector &state, std::span<const int> qubits) {
    std::uint64_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::out_of_range("qubit " + std::to_string(q) + " outside register of " +
                                    std::to_string(state.num_qubits()));
        }
        if (seen & (std::uint64_t{1} << q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        seen |= std::uint64_t{1} << q;
    }
}

/// Outcome mask of `qubits` inside basis index b.
std::uint64_t extract(std::uint64_t b, int n, std::span<const int> qubits) {
    std::uint64_t out = 0;
    for (int q : qubits) {
        out = (out << 1) | ((b >> (n - 1 - q)) & 1u);
    }
    return out;
}

std::uint64_t sample_index(std::span<const double> probs, Rng &rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) {
            last_nonzero = i;
        }
        acc += probs[i];
        if (u < acc) {
            return i;
        }
    }
    return last_nonzero;
}

MeasurementBranch collapse(const StateVector &state, std::span<const int> qubits, std::uint64_t outcome) {
    const int n = state.num_qubits();
    const int k = static_cast<int>(qubits.size());
    std::vector<int> rest;
    {
        std::uint64_t measured = 0;
        for (int q : qubits) {
            measured |= std::uint64_t{1} << q;
        }
        for (int q = 0; q < n; ++q) {
            if (!(measured & (std::uint64_t{1} << q))) {
                rest.push_back(q);
            }
        }
    }
    std::vector<Amplitude> out(std::size_t{1} << rest.size());
    double p = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (extract(b, n, qubits) != outcome) {
            continue;
        }
        out[extract(b, n, rest)] = amps[b];
        p += std::norm(amps[b]);
    }
    if (!(p > 0.0)) {
        throw std::domain_error("measurement outcome " + to_string(from_mask(outcome, k)) + " has zero probability");
    }
    const double s = 1.0 / std::sqrt(p);
    for (auto &a : out) {
        a *= s;
    }
    return {from_mask(outcome, k), p, StateAccess::make(static_cast<int>(rest.size()), std::move(out))};
}

}  // namespace

StateVector::StateVector() : num_qubits_(0), amps_{Amplitude{1.0, 0.0}} {}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::zero(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::plus(int num_qubits) {
    check_qubit_count(num_qubits, 1);
    const std::size_t dim = std::size_t{1} << num_qubits;
    return {num_qubits, std::vector<Amplitude>(dim, Amplitude{1.0 / std::sqrt(static_cast<double>(dim)), 0.0})};
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    check_qubit_count(num_qubits, 0);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index outside register");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return {num_qubits, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    const std::size_t dim = amps.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    const int n = std::countr_zero(dim);
    check_qubit_count(n, 0);
    double norm = 0.0;
    for (const auto &a : amps) {
        norm += std::norm(a);
    }
    if (!(norm > 0.0)) {
        throw std::invalid_argument("zero vector is not a state");
    }
    const double s = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= s;
    }
    return {n, std::move(amps)};
}

StateVector StateVector::random(int num_qubits, Rng &rng) {
    check_qubit_count(num_qubits, 0);
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
    }
    return from_amplitudes(std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    if (use_parallel(amps_.size())) {
        kernels::omp::probabilities(amps_, out);
    } else {
        kernels::serial::probabilities(amps_, out);
    }
    return out;
}

StateVector apply_pauli(StateVector state, const PauliString &pauli, int offset) {
    const int n = state.num_qubits();
    const int k = pauli.num_qubits();
    if (offset < 0 || offset + k > n) {
        throw std::out_of_range("Pauli string of width " + std::to_string(k) + " at offset " +
                                std::to_string(offset) + " exceeds register of " + std::to_string(n));
    }
    const int shift = n - offset - k;
    const std::uint64_t x = pauli.x_mask() << shift;
    const std::uint64_t z = pauli.z_mask() << shift;
    auto amps = StateAccess::data(state);
    if (use_parallel(amps.size())) {
        kernels::omp::apply_pauli(amps, x, z);
    } else {
        kernels::serial::apply_pauli(amps, x, z);
    }
    return state;
}

StateVector apply_hadamard_all(StateVector state) {
    auto amps = StateAccess::data(state);
    if (use_parallel(amps.size())) {
        kernels::omp::walsh_hadamard(amps);
    } else {
        kernels::serial::walsh_hadamard(amps);
    }
    return state;
}

StateVector apply_cz_ladder(StateVector state) {
    auto amps = StateAccess::data(state);
    if (use_parallel(amps.size())) {
        kernels::omp::cz_ladder(amps, state.num_qubits());
    } else {
        kernels::serial::cz_ladder(amps, state.num_qubits());
    }
    return state;
}

StateVector apply_diagonal(StateVector state, std::span<const Amplitude> diag, int offset) {
    const std::size_t dim = diag.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("diagonal length must be a power of two");
    }
    const int k = std::countr_zero(dim);
    if (offset < 0 || offset + k > state.num_qubits()) {
        throw std::out_of_range("diagonal block exceeds register");
    }
    auto amps = StateAccess::data(state);
    if (use_parallel(amps.size())) {
        kernels::omp::multiply_diagonal(amps, state.num_qubits(), offset, k, diag);
    } else {
        kernels::serial::multiply_diagonal(amps, state.num_qubits(), offset, k, diag);
    }
    return state;
}

StateVector apply_cnot(StateVector state, int control, int target) {
    const int n = state.num_qubits();
    if (control < 0 || control >= n || target < 0 || target >= n || control == target) {
        throw std::out_of_range("bad CNOT qubits");
    }
    auto amps = StateAccess::data(state);
    if (use_parallel(amps.size())) {
        kernels::omp::cnot(amps, n, control, target);
    } else {
        kernels::serial::cnot(amps, n, control, target);
    }
    return state;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const int n = a.num_qubits() + b.num_qubits();
    check_qubit_count(n, 0);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    const auto lo = b.amplitudes();
    const auto hi = a.amplitudes();
    for (std::size_t i = 0; i < hi.size(); ++i) {
        for (std::size_t j = 0; j < lo.size(); ++j) {
            amps[i * lo.size() + j] = hi[i] * lo[j];
        }
    }
    return StateAccess::make(n, std::move(amps));
}

StateVector permute_qubits(const StateVector &state, std::span<const int> order) {
    const int n = state.num_qubits();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("permutation length differs from register size");
    }
    check_qubits(state, order);
    const auto src = state.amplitudes();
    std::vector<Amplitude> out(src.size());
    for (std::uint64_t b = 0; b < src.size(); ++b) {
        out[extract(b, n, order)] = src[b];
    }
    return StateAccess::make(n, std::move(out));
}

std::vector<double> outcome_probabilities(const StateVector &state, std::span<const int> qubits) {
    check_qubits(state, qubits);
    std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        out[extract(b, state.num_qubits(), qubits)] += std::norm(amps[b]);
    }
    return out;
}

MeasurementBranch measure_computational(const StateVector &state, std::span<const int> qubits, Rng &rng) {
    if (qubits.empty()) {
        throw std::invalid_argument("measure_computational: empty qubit set");
    }
    const auto probs = outcome_probabilities(state, qubits);
    return collapse(state, qubits, sample_index(probs, rng));
}

MeasurementBranch measure_forced(const StateVector &state, std::span<const int> qubits,
                                 std::span<const std::uint8_t> bits) {
    if (qubits.empty() || bits.size() != qubits.size()) {
        throw std::invalid_argument("measure_forced: outcome length must match a nonempty qubit set");
    }
    check_qubits(state, qubits);
    return collapse(state, qubits, to_mask(bits));
}

std::vector<MeasurementBranch> measure_branches(const StateVector &state, std::span<const int> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("measure_branches: empty qubit set");
    }
    const auto probs = outcome_probabilities(state, qubits);
    std::vector<MeasurementBranch> out;
    for (std::uint64_t o = 0; o < probs.size(); ++o) {
        if (probs[o] > kBranchCutoff) {
            out.push_back(collapse(state, qubits, o));
        }
    }
    return out;
}

Bits measure_x_all(const StateVector &state, Rng &rng) {
    const auto rotated = apply_hadamard_all(state);
    const auto probs = rotated.probabilities();
    return from_mask(sample_index(probs, rng), state.num_qubits());
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("fidelity_up_to_phase: dimension mismatch");
    }
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

}  // namespace blindtele
