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

#include "blindtele/program.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace blindtele {

const DiagonalGate &Program::gate(int phase, int block) const {
    return gates.at(static_cast<std::size_t>(phase - 1)).at(static_cast<std::size_t>(block - 1));
}

void Program::validate() const {
    if (n < 1) {
        throw SchemaError("/n", "must be positive");
    }
    if (m < 1 || n % m != 0) {
        throw SchemaError("/m", "must be positive and divide n");
    }
    if (x < 2) {
        throw SchemaError("/x", "must be at least 2");
    }
    if (x > DiagonalGate::kMaxLevel) {
        throw SchemaError("/x", "exceeds the maximum level " + std::to_string(DiagonalGate::kMaxLevel));
    }
    if (J < 2 || J % 2 != 0) {
        throw SchemaError("/J", "must be even and at least 2");
    }
    if (static_cast<int>(gates.size()) != J) {
        throw SchemaError("/gates", "expected " + std::to_string(J) + " phases, got " + std::to_string(gates.size()));
    }
    for (int j = 0; j < J; ++j) {
        const auto &row = gates[static_cast<std::size_t>(j)];
        const std::string row_path = "/gates/" + std::to_string(j);
        if (static_cast<int>(row.size()) != blocks()) {
            throw SchemaError(row_path, "expected " + std::to_string(blocks()) + " blocks, got " + std::to_string(row.size()));
        }
        for (int p = 0; p < blocks(); ++p) {
            const auto &g = row[static_cast<std::size_t>(p)];
            const std::string path = row_path + "/" + std::to_string(p);
            if (g.num_qubits() != m) {
                throw SchemaError(path + "/m", "gate acts on " + std::to_string(g.num_qubits()) + " qubits, expected " +
                                                   std::to_string(m));
            }
            if (!g.in_level(x)) {
                throw SchemaError(path + "/level", "gate level " + std::to_string(g.level()) + " exceeds x = " +
                                                       std::to_string(x));
            }
        }
    }
}

nlohmann::json program_to_json(const Program &program) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &row : program.gates) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &g : row) {
            r.push_back(gate_to_json(g));
        }
        gates.push_back(std::move(r));
    }
    return {{"format", "blindtele-program"}, {"version", kProgramFormatVersion},
            {"n", program.n}, {"m", program.m}, {"x", program.x}, {"J", program.J}, {"gates", std::move(gates)}};
}

namespace {

int int_field(const nlohmann::json &j, const char *key) {
    const std::string path = std::string("/") + key;
    if (!j.contains(key)) {
        throw SchemaError(path, "missing");
    }
    if (!j.at(key).is_number_integer()) {
        throw SchemaError(path, "expected an integer");
    }
    const auto v = j.at(key).get<std::int64_t>();
    if (v < 0 || v > 1'000'000) {
        throw SchemaError(path, "out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

Program program_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw SchemaError("/", "expected a program object");
    }
    if (j.contains("format") && j.at("format") != "blindtele-program") {
        throw SchemaError("/format", "expected \"blindtele-program\"");
    }
    if (j.contains("version") && j.at("version") != kProgramFormatVersion) {
        throw SchemaError("/version", "unsupported version");
    }
    Program p;
    p.n = int_field(j, "n");
    p.m = int_field(j, "m");
    p.x = int_field(j, "x");
    p.J = int_field(j, "J");
    if (!j.contains("gates") || !j.at("gates").is_array()) {
        throw SchemaError("/gates", "expected an array of phases");
    }
    const auto &phases = j.at("gates");
    for (std::size_t a = 0; a < phases.size(); ++a) {
        const std::string row_path = "/gates/" + std::to_string(a);
        if (!phases[a].is_array()) {
            throw SchemaError(row_path, "expected an array of blocks");
        }
        std::vector<DiagonalGate> row;
        for (std::size_t b = 0; b < phases[a].size(); ++b) {
            row.push_back(gate_from_json(phases[a][b], row_path + "/" + std::to_string(b)));
        }
        p.gates.push_back(std::move(row));
    }
    p.validate();
    return p;
}

Program load_program(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open program file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw std::runtime_error(path.string() + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return program_from_json(j);
}

void save_program(const Program &program, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write program file " + path.string());
    }
    out << program_to_json(program).dump(2) << '\n';
}

Program identity_program(int n, int m, int x, int J) {
    Program p{n, m, x, J, {}};
    for (int j = 0; j < J; ++j) {
        p.gates.emplace_back(static_cast<std::size_t>(n / m), DiagonalGate(m));
    }
    p.validate();
    return p;
}

Program random_program(int n, int m, int x, int J, Rng &rng) {
    Program p{n, m, x, J, {}};
    for (int j = 0; j < J; ++j) {
        std::vector<DiagonalGate> row;
        for (int b = 0; b < n / m; ++b) {
            row.push_back(DiagonalGate::random(m, x, rng));
        }
        p.gates.push_back(std::move(row));
    }
    p.validate();
    return p;
}

}  // namespace blindtele
