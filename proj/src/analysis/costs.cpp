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

#include "blindtele/costs.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace blindtele {

void BoundParams::validate() const {
    if (J < 1 || B < 1 || d < 1 || k < 1 || n < 1 || !(G >= 1.0) || !(N_C >= 1.0)) {
        throw std::invalid_argument("bound parameters must be positive, with G and N_C at least 1");
    }
}

std::uint64_t no_programming_bound(const BoundParams &params) {
    params.validate();
    if (params.n >= 64) {
        throw std::overflow_error("no-programming bound overflows 64 bits");
    }
    const std::uint64_t terms = (std::uint64_t{1} << params.n) - 1;
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(params.J, params.k, &out) || __builtin_mul_overflow(out, terms, &out)) {
        throw std::overflow_error("no-programming bound overflows 64 bits");
    }
    return out;
}

double pigeonhole_bound(const BoundParams &params) {
    if (params.B * params.d < 2) {
        throw std::domain_error("pigeonhole bound needs B * d >= 2");
    }
    params.validate();
    return static_cast<double>(params.J) * std::log(params.G) /
           std::log(static_cast<double>(params.B * params.d));
}

double gate_set_size(int m, int k) { return std::pow(2.0, static_cast<double>(k) * (std::pow(2.0, m) - 1.0)); }

bool CostReport::counts_exact() const {
    return qubits_a2b == expected_qubits && bits_b2a == expected_bits && recount_qubits == qubits_a2b &&
           recount_bits == bits_b2a;
}

nlohmann::json CostReport::to_json() const {
    return {
        {"n", n},
        {"m", m},
        {"x", x},
        {"J", J},
        {"qubits_alice_to_bob", qubits_a2b},
        {"bits_bob_to_alice", bits_b2a},
        {"expected_qubits", expected_qubits},
        {"expected_bits", expected_bits},
        {"nJx", nJx},
        {"no_programming_bound", no_programming},
        {"bound_ratio", ratio},
        {"counts_exact", counts_exact()},
        {"within_nJx_plus_n", within_leading_order()},
    };
}

std::string CostReport::to_text() const {
    std::ostringstream out;
    auto row = [&out](const char *label, const std::string &value) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-34s %12s\n", label, value.c_str());
        out << buf;
    };
    char ratio_buf[32];
    std::snprintf(ratio_buf, sizeof ratio_buf, "%.6f", ratio);
    row("parameters (n, m, x, J)",
        std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(x) + "," + std::to_string(J));
    row("qubits Alice->Bob (measured)", std::to_string(qubits_a2b));
    row("qubits Alice->Bob n+(J-1)nx", std::to_string(expected_qubits));
    row("bits Bob->Alice (measured)", std::to_string(bits_b2a));
    row("bits Bob->Alice (J-1)nx+n", std::to_string(expected_bits));
    row("leading order nJx", std::to_string(nJx));
    row("no-programming bound Jx(2^n-1)", std::to_string(no_programming));
    row("bound / measured qubits", ratio_buf);
    row("counts exact", counts_exact() ? "yes" : "no");
    return out.str();
}

CostReport cost_report(const Transcript &transcript, const Program &program) {
    program.validate();
    const auto &entries = transcript.entries();
    long quantum = 0;
    for (const auto &e : entries) {
        quantum += e.kind == TranscriptEntry::Kind::Quantum ? 1 : 0;
    }
    const long resources = static_cast<long>(program.J - 1) * program.blocks() * program.x;
    if (entries.empty() || entries.back().kind != TranscriptEntry::Kind::Classical ||
        entries.back().bits != program.n || quantum != 1 + resources) {
        throw std::invalid_argument("transcript does not cover a completed run of this program");
    }
    CostReport r;
    r.n = program.n;
    r.m = program.m;
    r.x = program.x;
    r.J = program.J;
    r.qubits_a2b = transcript.qubits_alice_to_bob();
    r.bits_b2a = transcript.bits_bob_to_alice();
    std::tie(r.recount_qubits, r.recount_bits) = transcript.recount();
    const long nx = static_cast<long>(program.n) * program.x;
    r.expected_qubits = program.n + (program.J - 1) * nx;
    r.expected_bits = (program.J - 1) * nx + program.n;
    r.nJx = nx * program.J;
    BoundParams bound;
    bound.J = static_cast<std::uint64_t>(program.J);
    bound.k = static_cast<std::uint64_t>(program.x);
    bound.n = program.n;
    r.no_programming = no_programming_bound(bound);
    r.ratio = static_cast<double>(r.no_programming) / static_cast<double>(r.qubits_a2b);
    return r;
}

}  // namespace blindtele
