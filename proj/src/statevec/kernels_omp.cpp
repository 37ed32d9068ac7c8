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

#include <cmath>
#include <utility>

#include "blindtele/kernels.hpp"

namespace blindtele::kernels::omp {

namespace {

// Pair k of a layer with half-width h lives at (k / h) * 2h + k % h.
inline std::size_t pair_low(std::size_t k, std::size_t h) { return ((k / h) * (h << 1)) + (k % h); }

template <class T>
void butterflies(std::span<T> v) {
    const std::size_t n = v.size();
    const auto pairs = static_cast<std::int64_t>(n / 2);
    for (std::size_t h = 1; h < n; h <<= 1) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < pairs; ++k) {
            const std::size_t j = pair_low(static_cast<std::size_t>(k), h);
            const T a = v[j];
            const T b = v[j + h];
            v[j] = a + b;
            v[j + h] = a - b;
        }
    }
}

}  // namespace

void walsh_hadamard(std::span<Amplitude> amps) {
    const double s = 1.0 / std::sqrt(2.0);
    const std::size_t n = amps.size();
    const auto pairs = static_cast<std::int64_t>(n / 2);
    for (std::size_t h = 1; h < n; h <<= 1) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < pairs; ++k) {
            const std::size_t j = pair_low(static_cast<std::size_t>(k), h);
            const Amplitude a = amps[j];
            const Amplitude b = amps[j + h];
            amps[j] = (a + b) * s;
            amps[j + h] = (a - b) * s;
        }
    }
}

void walsh_hadamard(std::span<double> values) { butterflies(values); }

void walsh_hadamard(std::span<std::int64_t> values) {
    const std::size_t n = values.size();
    const auto pairs = static_cast<std::int64_t>(n / 2);
    for (std::size_t h = 1; h < n; h <<= 1) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < pairs; ++k) {
            const std::size_t j = pair_low(static_cast<std::size_t>(k), h);
            const auto a = static_cast<std::uint64_t>(values[j]);
            const auto b = static_cast<std::uint64_t>(values[j + h]);
            values[j] = static_cast<std::int64_t>(a + b);
            values[j + h] = static_cast<std::int64_t>(a - b);
        }
    }
}

void multiply_diagonal(std::span<Amplitude> amps, int num_qubits, int offset, int block_qubits,
                       std::span<const Amplitude> diag) {
    const int shift = num_qubits - offset - block_qubits;
    const std::size_t mask = (std::size_t{1} << block_qubits) - 1;
    const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(i);
        amps[b] *= diag[(b >> shift) & mask];
    }
}

void cz_ladder(std::span<Amplitude> amps, int /*num_qubits*/) {
    const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(i);
        if (__builtin_popcountll(b & (b >> 1)) & 1) {
            amps[b] = -amps[b];
        }
    }
}

void apply_pauli(std::span<Amplitude> amps, std::uint64_t x_mask, std::uint64_t z_mask) {
    const auto n = static_cast<std::int64_t>(amps.size());
    if (z_mask != 0) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto b = static_cast<std::size_t>(i);
            if (__builtin_popcountll(b & z_mask) & 1) {
                amps[b] = -amps[b];
            }
        }
    }
    if (x_mask != 0) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto b = static_cast<std::size_t>(i);
            const std::size_t partner = b ^ x_mask;
            if (b < partner) {
                std::swap(amps[b], amps[partner]);
            }
        }
    }
}

void cnot(std::span<Amplitude> amps, int num_qubits, int control, int target) {
    const std::size_t cbit = std::size_t{1} << (num_qubits - 1 - control);
    const std::size_t tbit = std::size_t{1} << (num_qubits - 1 - target);
    const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(i);
        if ((b & cbit) && !(b & tbit)) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

void probabilities(std::span<const Amplitude> amps, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = std::norm(amps[static_cast<std::size_t>(i)]);
    }
}

}  // namespace blindtele::kernels::omp
