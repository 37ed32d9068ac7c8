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

// Serial reference kernels against their OpenMP counterparts. The register
// size is the benchmark argument.

#include <complex>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "blindtele/kernels.hpp"
#include "blindtele/random.hpp"

namespace {

using blindtele::kernels::Amplitude;

std::vector<Amplitude> random_amps(int n) {
    blindtele::Rng rng(7);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {rng.normal(), rng.normal()};
    }
    return amps;
}

std::vector<Amplitude> random_phases(int m) {
    blindtele::Rng rng(11);
    std::vector<Amplitude> diag(std::size_t{1} << m);
    for (auto &d : diag) {
        d = std::polar(1.0, rng.uniform() * 6.283185307179586);
    }
    return diag;
}

template <void (*Kernel)(std::span<Amplitude>)>
void BM_WalshHadamard(benchmark::State &state) {
    auto amps = random_amps(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Kernel(amps);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Kernel)(std::span<Amplitude>, int, int, int, std::span<const Amplitude>)>
void BM_MultiplyDiagonal(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    const int m = n < 3 ? n : 3;
    const auto diag = random_phases(m);
    for (auto _ : state) {
        Kernel(amps, n, n - m, m, diag);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Kernel)(std::span<Amplitude>, int)>
void BM_CzLadder(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    for (auto _ : state) {
        Kernel(amps, n);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Kernel)(std::span<Amplitude>, int, int, int)>
void BM_Cnot(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    for (auto _ : state) {
        Kernel(amps, n, 0, n - 1);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Kernel)(std::span<const Amplitude>, std::span<double>)>
void BM_Probabilities(benchmark::State &state) {
    const auto amps = random_amps(static_cast<int>(state.range(0)));
    std::vector<double> out(amps.size());
    for (auto _ : state) {
        Kernel(amps, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

namespace serial = blindtele::kernels::serial;
namespace omp = blindtele::kernels::omp;

#define BLINDTELE_BENCH_PAIR(name, serial_fn, omp_fn)                                  \
    BENCHMARK_TEMPLATE(name, serial_fn)->Name(#name "/serial")->DenseRange(8, 20, 4); \
    BENCHMARK_TEMPLATE(name, omp_fn)->Name(#name "/omp")->DenseRange(8, 20, 4)

BLINDTELE_BENCH_PAIR(BM_WalshHadamard, static_cast<void (*)(std::span<Amplitude>)>(serial::walsh_hadamard),
                     static_cast<void (*)(std::span<Amplitude>)>(omp::walsh_hadamard));
BLINDTELE_BENCH_PAIR(BM_MultiplyDiagonal, serial::multiply_diagonal, omp::multiply_diagonal);
BLINDTELE_BENCH_PAIR(BM_CzLadder, serial::cz_ladder, omp::cz_ladder);
BLINDTELE_BENCH_PAIR(BM_Cnot, serial::cnot, omp::cnot);
BLINDTELE_BENCH_PAIR(BM_Probabilities, serial::probabilities, omp::probabilities);

}  // namespace

BENCHMARK_MAIN();
