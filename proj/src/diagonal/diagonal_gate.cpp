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

#include "blindtele/diagonal_gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "blindtele/bits.hpp"
#include "blindtele/kernels.hpp"

namespace blindtele {

namespace {

std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

void check_shape(int num_qubits, int level) {
    if (num_qubits < 1 || num_qubits > DiagonalGate::kMaxQubits) {
        throw std::invalid_argument("diagonal gate width " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(DiagonalGate::kMaxQubits) + "]");
    }
    if (level < 0 || level > DiagonalGate::kMaxLevel) {
        throw std::invalid_argument("diagonal gate level " + std::to_string(level) + " outside [0, " +
                                    std::to_string(DiagonalGate::kMaxLevel) + "]");
    }
}

}  // namespace

DiagonalGate::DiagonalGate(int num_qubits) : DiagonalGate(num_qubits, 0, {}) {}

DiagonalGate::DiagonalGate(int num_qubits, int level, std::vector<std::uint64_t> numerators)
    : num_qubits_(num_qubits), level_(level), numerators_(std::move(numerators)) {
    check_shape(num_qubits, level);
    numerators_.resize(std::size_t{1} << num_qubits, 0);
    canonicalize();
}

void DiagonalGate::canonicalize() {
    const std::uint64_t mask = low_mask(level_);
    numerators_[0] = 0;
    for (auto &r : numerators_) {
        r &= mask;
    }
    while (level_ > 0 && std::all_of(numerators_.begin(), numerators_.end(), [](std::uint64_t r) { return (r & 1) == 0; })) {
        for (auto &r : numerators_) {
            r >>= 1;
        }
        --level_;
    }
}

DiagonalGate DiagonalGate::from_numerators(int num_qubits, int level, std::span<const std::int64_t> numerators) {
    check_shape(num_qubits, level);
    if (numerators.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << num_qubits) +
                                    " numerators, got " + std::to_string(numerators.size()));
    }
    std::vector<std::uint64_t> table(numerators.size());
    // Two's complement wraparound is exact modulo 2^level.
    std::transform(numerators.begin(), numerators.end(), table.begin(),
                   [](std::int64_t r) { return static_cast<std::uint64_t>(r); });
    return {num_qubits, level, std::move(table)};
}

DiagonalGate DiagonalGate::single_term(int num_qubits, std::uint64_t mask, int level, std::int64_t numerator) {
    check_shape(num_qubits, level);
    std::vector<std::uint64_t> table(std::size_t{1} << num_qubits, 0);
    table.at(mask) = static_cast<std::uint64_t>(numerator);
    return {num_qubits, level, std::move(table)};
}

DiagonalGate DiagonalGate::z_string(int num_qubits, std::uint64_t mask) {
    return single_term(num_qubits, mask, 1, 1);
}

DiagonalGate DiagonalGate::random(int num_qubits, int level, Rng &rng) {
    check_shape(num_qubits, level);
    std::vector<std::uint64_t> table(std::size_t{1} << num_qubits, 0);
    for (std::size_t j = 1; j < table.size(); ++j) {
        table[j] = rng.below(std::uint64_t{1} << level);
    }
    return {num_qubits, level, std::move(table)};
}

DiagonalGate DiagonalGate::from_real_phases(int num_qubits, int level, std::span<const double> phases) {
    check_shape(num_qubits, level);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (phases.size() != dim) {
        throw std::invalid_argument("phase vector length mismatch");
    }
    std::vector<double> theta(phases.begin(), phases.end());
    kernels::serial::walsh_hadamard(std::span<double>(theta));
    std::vector<std::int64_t> table(dim);
    const double scale = std::ldexp(1.0, level) / (std::numbers::pi * static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const double r = theta[j] * scale;
        const double rounded = std::round(r);
        if (std::abs(r - rounded) > 1e-6) {
            throw std::domain_error("angle of Z-string " + std::to_string(j) + " is not a multiple of pi/2^" +
                                    std::to_string(level));
        }
        table[j] = static_cast<std::int64_t>(rounded);
    }
    return from_numerators(num_qubits, level, table);
}

std::uint64_t DiagonalGate::phase_numerator(std::uint64_t basis) const {
    if (basis >= numerators_.size()) {
        throw std::out_of_range("basis index outside gate");
    }
    std::uint64_t acc = 0;
    for (std::uint64_t j = 1; j < numerators_.size(); ++j) {
        acc += parity(j & basis) ? -numerators_[j] : numerators_[j];
    }
    return acc & low_mask(level_ + 1);
}

std::vector<std::uint64_t> DiagonalGate::phase_numerators() const {
    std::vector<std::int64_t> work(numerators_.begin(), numerators_.end());
    kernels::serial::walsh_hadamard(std::span<std::int64_t>(work));
    std::vector<std::uint64_t> out(work.size());
    const std::uint64_t mask = low_mask(level_ + 1);
    for (std::size_t b = 0; b < work.size(); ++b) {
        out[b] = static_cast<std::uint64_t>(work[b]) & mask;
    }
    return out;
}

std::vector<double> DiagonalGate::real_phases() const {
    std::vector<double> phi(numerators_.size());
    const double unit = std::numbers::pi / std::ldexp(1.0, level_);
    for (std::size_t j = 0; j < phi.size(); ++j) {
        phi[j] = static_cast<double>(numerators_[j]) * unit;
    }
    kernels::serial::walsh_hadamard(std::span<double>(phi));
    return phi;
}

std::vector<std::complex<double>> DiagonalGate::to_unitary_diag() const {
    const auto p = phase_numerators();
    std::vector<std::complex<double>> out(p.size());
    const double unit = std::numbers::pi / std::ldexp(1.0, level_);
    for (std::size_t b = 0; b < p.size(); ++b) {
        out[b] = std::polar(1.0, static_cast<double>(p[b]) * unit);
    }
    return out;
}

DiagonalGate DiagonalGate::conjugate_update(std::uint64_t flip_mask) const {
    if (level_ == 0) {
        return DiagonalGate(num_qubits_);
    }
    std::vector<std::uint64_t> table(numerators_.size(), 0);
    for (std::uint64_t j = 1; j < table.size(); ++j) {
        if (parity(j & flip_mask)) {
            table[j] = -numerators_[j];
        }
    }
    return {num_qubits_, level_ - 1, std::move(table)};
}

DiagonalGate DiagonalGate::correction_frame(std::uint64_t chi_mask, std::uint64_t zeta_mask) const {
    const int level = std::max(level_, 1);
    const int lift = level - level_;
    std::vector<std::uint64_t> table(numerators_.size());
    for (std::uint64_t j = 0; j < table.size(); ++j) {
        const std::uint64_t r = numerators_[j] << lift;
        table[j] = parity(j & chi_mask) ? -r : r;
    }
    if (zeta_mask != 0) {
        table.at(zeta_mask) += std::uint64_t{1} << (level - 1);
    }
    return {num_qubits_, level, std::move(table)};
}

DiagonalGate DiagonalGate::dagger() const {
    std::vector<std::uint64_t> table(numerators_.size());
    std::transform(numerators_.begin(), numerators_.end(), table.begin(), [](std::uint64_t r) { return -r; });
    return {num_qubits_, level_, std::move(table)};
}

DiagonalGate compose(const DiagonalGate &a, const DiagonalGate &b) {
    if (a.num_qubits_ != b.num_qubits_) {
        throw std::invalid_argument("compose: gates act on different qubit counts");
    }
    const int level = std::max(a.level_, b.level_);
    std::vector<std::uint64_t> table(a.numerators_.size());
    for (std::size_t j = 0; j < table.size(); ++j) {
        table[j] = (a.numerators_[j] << (level - a.level_)) + (b.numerators_[j] << (level - b.level_));
    }
    return {a.num_qubits_, level, std::move(table)};
}

bool DiagonalGate::same_unitary(const DiagonalGate &other) const {
    if (num_qubits_ != other.num_qubits_) {
        return false;
    }
    const int level = std::max(level_, other.level_);
    const std::uint64_t mask = low_mask(level + 1);
    const auto pa = phase_numerators();
    const auto pb = other.phase_numerators();
    const std::uint64_t offset = ((pa[0] << (level - level_)) - (pb[0] << (level - other.level_))) & mask;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const std::uint64_t d = ((pa[i] << (level - level_)) - (pb[i] << (level - other.level_))) & mask;
        if (d != offset) {
            return false;
        }
    }
    return true;
}

std::vector<DiagonalGate> enumerate_gates(int num_qubits, int level) {
    check_shape(num_qubits, level);
    const std::size_t terms = (std::size_t{1} << num_qubits) - 1;
    if (static_cast<std::size_t>(level) * terms > 20) {
        throw std::length_error("enumeration of more than 2^20 gates refused");
    }
    const std::uint64_t count = std::uint64_t{1} << (level * terms);
    std::vector<DiagonalGate> out;
    out.reserve(count);
    std::vector<std::int64_t> table(terms + 1, 0);
    for (std::uint64_t code = 0; code < count; ++code) {
        for (std::size_t j = 1; j <= terms; ++j) {
            table[j] = static_cast<std::int64_t>((code >> (level * (j - 1))) & low_mask(level));
        }
        out.push_back(DiagonalGate::from_numerators(num_qubits, level, table));
    }
    return out;
}

}  // namespace blindtele
