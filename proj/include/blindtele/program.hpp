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

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "blindtele/diagonal_gate.hpp"
#include "blindtele/gate_json.hpp"
#include "blindtele/random.hpp"

namespace blindtele {

/// Alice's private computation: measure
///   H D_J H D_{J-1} H CZ ... CZ D_2 H D_1 |+>^n
/// in the computational basis, where CZ precedes the Hadamard layer of every
/// odd phase j >= 3 and D_j is the tensor product of its blocks D_{j,p}.
struct Program {
    int n = 0;
    int m = 0;
    int x = 0;
    int J = 0;
    /// gates[j - 1][p - 1] = D_{j,p}, each on m qubits with level <= x.
    std::vector<std::vector<DiagonalGate>> gates;

    int blocks() const { return m > 0 ? n / m : 0; }
    /// 1-based phase and block.
    const DiagonalGate &gate(int phase, int block) const;

    /// Checks m | n, J even and >= 2, x >= 2 and every gate's shape and level.
    /// Throws SchemaError naming the offending field.
    void validate() const;
};

inline constexpr int kProgramFormatVersion = 1;

/// {"format": "blindtele-program", "version": 1, "n", "m", "x", "J",
///  "gates": [[gate for p = 1..P] for j = 1..J]} with gates as in gate_json.hpp.
nlohmann::json program_to_json(const Program &program);
Program program_from_json(const nlohmann::json &j);

/// Throws std::runtime_error for I/O and parse failures (with the byte
/// offset of a syntax error) and SchemaError for schema violations.
Program load_program(const std::filesystem::path &path);
void save_program(const Program &program, const std::filesystem::path &path);

Program identity_program(int n, int m, int x, int J);
Program random_program(int n, int m, int x, int J, Rng &rng);

}  // namespace blindtele
