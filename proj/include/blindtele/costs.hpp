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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "blindtele/program.hpp"
#include "blindtele/transcript.hpp"

namespace blindtele {

/// Inputs of the communication lower bounds. d is the qudit dimension, B
/// the number of measurement bases, G the gate-set size, k the dyadic level
/// and N_C the number of computations to distinguish.
struct BoundParams {
    std::uint64_t J = 1;
    double G = 1.0;
    std::uint64_t B = 2;
    std::uint64_t d = 2;
    std::uint64_t k = 1;
    int n = 1;
    double N_C = 1.0;

    /// Throws std::invalid_argument unless every field is positive (and
    /// G, N_C >= 1).
    void validate() const;
};

/// J * k * (2^n - 1). Throws std::overflow_error past 64 bits.
std::uint64_t no_programming_bound(const BoundParams &params);
/// J * log(G) / log(B d). Throws std::domain_error when B * d < 2.
double pigeonhole_bound(const BoundParams &params);

/// Number of gates in D_{m,k}: (2^k)^(2^m - 1), as a double.
double gate_set_size(int m, int k);

struct CostReport {
    int n = 0;
    int m = 0;
    int x = 0;
    int J = 0;
    long qubits_a2b = 0;
    long bits_b2a = 0;
    /// Counts recomputed by summing the transcript's entries.
    long recount_qubits = 0;
    long recount_bits = 0;
    /// n + (J - 1) n x and (J - 1) n x + n.
    long expected_qubits = 0;
    long expected_bits = 0;
    /// The leading-order figure n J x.
    long nJx = 0;
    /// J k (2^n - 1) with k = x.
    std::uint64_t no_programming = 0;
    /// no_programming / qubits_a2b.
    double ratio = 0.0;

    bool counts_exact() const;
    bool within_leading_order() const { return qubits_a2b <= nJx + n; }

    nlohmann::json to_json() const;
    /// Aligned two-column table.
    std::string to_text() const;
};

/// Costs of a completed blind-computation transcript of `program`. Throws
/// std::invalid_argument if the transcript is incomplete.
CostReport cost_report(const Transcript &transcript, const Program &program);

}  // namespace blindtele
