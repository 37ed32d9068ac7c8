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

namespace blindtele::kernels::serial {

namespace {

template <class T>
void butterflies(std::span<T> v) {
    const std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const T a = v[j];
                const T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

}  // namespace

void walsh_hadamard(std::span<Amplitude> amps) {
    const double s = 1.0 / std::sqrt(2.0);
    const std::size_t n = amps.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Amplitude a = amps[j];
                const Amplitude b = amps[j + h];
                amps[j] = (a + b) * s;
                amps[j + h] = (a - b) * s;
            }
        }
    }
}

void walsh_hadamard(std::span<double> values) { butterflies(values); }

void walsh_hadamard(std::span<std::int64_t> values) {
    // Unsigned arithmetic gives well-defined wraparound; callers reduce mod 2^k.
    const std::size_t n = values.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const auto a = static_cast<std::uint64_t>(values[j]);
                const auto b = static_cast<std::uint64_t>(values[j + h]);
                values[j] = static_cast<std::int64_t>(a + b);
                values[j + h] = static_cast<std::int64_t>(a - b);
            }
        }
    }
}

void multiply_diagonal(std::span<Amplitude> amps, int num_qubits, int offset, int block_qubits,
                       std::span<const Amplitude> diag) {
    const int shift = num_qubits - offset - block_qubits;
    const std::size_t mask = (std::size_t{1} << block_qubits) - 1;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= diag[(b >> shift) & mask];
    }
}

void cz_ladder(std::span<Amplitude> amps, int /*num_qubits*/) {
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (__builtin_popcountll(b & (b >> 1)) & 1) {
            amps[b] = -amps[b];
        }
    }
}

void apply_pauli(std::span<Amplitude> amps, std::uint64_t x_mask, std::uint64_t z_mask) {
    if (z_mask != 0) {
        for (std::size_t b = 0; b < amps.size(); ++b) {
            if (__builtin_popcountll(b & z_mask) & 1) {
                amps[b] = -amps[b];
            }
        }
    }
    if (x_mask != 0) {
        for (std::size_t b = 0; b < amps.size(); ++b) {
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
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if ((b & cbit) && !(b & tbit)) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

void probabilities(std::span<const Amplitude> amps, std::span<double> out) {
    for (std::size_t b = 0; b < amps.size(); ++b) {
        out[b] = std::norm(amps[b]);
    }
}

}  // namespace blindtele::kernels::serial
