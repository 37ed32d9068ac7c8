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

// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "blindtele/blind_computation.hpp"
#include "blindtele/blindness.hpp"
#include "blindtele/costs.hpp"
#include "blindtele/iterated.hpp"
#include "blindtele/oracle.hpp"
#include "blindtele/teleport.hpp"
#include "dense.hpp"

namespace blindtele {
namespace {

namespace fs = std::filesystem;

using dense::Mat;
using dense::Vec;

constexpr double kFidelityTol = 1e-10;

/// exp(i sum_j theta_j Z^j) built from the numerator table, independent of
/// the gate's own phase evaluation.
Mat reference(const DiagonalGate &g) {
    std::vector<double> theta(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        theta[j] = static_cast<double>(g.numerator(j)) * std::numbers::pi / std::ldexp(1.0, g.level());
    }
    return dense::diagonal_exp(g.num_qubits(), theta);
}

Bits zeros(int m) { return Bits(static_cast<std::size_t>(m), 0); }

/// Fidelity of `got` with frame * D * psi.
double fidelity_to(const StateVector &got, const PauliString &frame, const DiagonalGate &gate,
                   const StateVector &psi) {
    const Vec want = dense::pauli(frame.x_bits(), frame.z_bits()) * reference(gate) * dense::vec(psi);
    return dense::fidelity(dense::vec(got), want);
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Check teleport_postcondition() {
    Check c;
    Rng rng(1001);
    double worst = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const int level = static_cast<int>(rng.below(5));
        const auto gate = DiagonalGate::random(m, level, rng);
        const auto psi = StateVector::random(m, rng);
        const auto resource = apply_diagonal(StateVector::plus(m), gate.to_unitary_diag());
        const auto r = teleport_round(psi, resource, rng);
        const Vec want = reference(gate) * dense::pauli(r.outcome, zeros(m)) * dense::vec(psi);
        worst = std::min(worst, dense::fidelity(dense::vec(r.state), want));
    }
    c.require(worst >= 1.0 - kFidelityTol, "fidelity " + std::to_string(worst));
    c.detail = c.ok ? "200 trials, worst fidelity " + std::to_string(worst) : c.detail;
    return c;
}

Check level_reduction() {
    Check c;
    Rng rng(1002);
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const int level = 1 + static_cast<int>(rng.below(5));
        const auto gate = DiagonalGate::random(m, level, rng);
        const std::uint64_t a = rng.below(std::uint64_t{1} << m);
        const auto next = gate.conjugate_update(a);
        c.require(next.in_level(level - 1), "trial " + std::to_string(trial) + ": level " +
                                                std::to_string(next.level()) + " > " + std::to_string(level - 1));
        const Mat xa = dense::pauli(from_mask(a, m), zeros(m));
        const Mat want = xa * reference(gate) * xa * reference(gate).adjoint();
        c.require(dense::equal_up_to_phase(reference(next), want, 1e-10),
                  "trial " + std::to_string(trial) + ": matrix mismatch");
    }
    if (c.ok) {
        c.detail = "500 trials";
    }
    return c;
}

/// Every branch of one session: final state against frame * D * psi.
void check_branches(Check &c, const DiagonalGate &gate, int rounds, const StateVector &psi, bool blind) {
    const IteratedSession root(gate, rounds, psi, {.blind = blind});
    double total = 0.0;
    for_each_branch(root, [&](const IteratedSession &s, double w) {
        const auto r = iterated_result(s, w);
        const PauliString frame = blind ? r.key * r.byproduct : r.byproduct;
        const double f = fidelity_to(r.final_state, frame, gate, psi);
        c.require(f >= 1.0 - kFidelityTol, "branch fidelity " + std::to_string(f));
        total += w;
    });
    c.require(std::abs(total - 1.0) < 1e-10, "branch weights sum to " + std::to_string(total));
}

Check prot1_telescoping() {
    Check c;
    Rng rng(1003);
    for (auto [m, l] : {std::pair{1, 3}, {2, 2}}) {
        for (int trial = 0; trial < 10; ++trial) {
            check_branches(c, DiagonalGate::random(m, l, rng), l, StateVector::random(m, rng), false);
        }
    }
    if (c.ok) {
        c.detail = "(m,l) = (1,3), (2,2); 10 gates each, every branch";
    }
    return c;
}

Check prot2_blindness() {
    Check c;
    Rng rng(1004);
    for (int trial = 0; trial < 10; ++trial) {
        check_branches(c, DiagonalGate::random(1, 2, rng), 2, StateVector::random(1, rng), true);
    }
    double worst = 0.0;
    for (auto [m, l] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
        const auto gate = DiagonalGate::random(m, l, rng);
        worst = std::max(worst, blindness_distance(gate, l, StateVector::random(m, rng)));
    }
    c.require(worst <= 1e-9, "trace distance to mixed " + std::to_string(worst));
    const auto psi = StateVector::random(2, rng);
    const auto a = DiagonalGate::random(2, 2, rng);
    auto b = DiagonalGate::random(2, 2, rng);
    while (b.same_unitary(a)) {
        b = DiagonalGate::random(2, 2, rng);
    }
    const double between = trace_distance(prot2_view(a, 2, psi), prot2_view(b, 2, psi));
    c.require(between <= 1e-9, "views of two gates differ by " + std::to_string(between));
    if (c.ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "branches exact; max distance to mixed %.2e; between gates %.2e", worst,
                      between);
        c.detail = buf;
    }
    return c;
}

std::vector<fs::path> fixtures() {
    std::vector<fs::path> out;
    for (const auto &e : fs::directory_iterator(BLINDTELE_FIXTURES)) {
        if (e.path().extension() == ".json") {
            out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Check prot3_end_to_end() {
    Check c;
    double worst = 0.0;
    int count = 0;
    for (const auto &path : fixtures()) {
        const auto p = load_program(path);
        const auto exact = prot3_exact_distribution(p);
        const auto oracle = oracle_simulate(p);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            worst = std::max(worst, std::abs(exact[i] - oracle[i]));
        }
        c.require(worst <= 1e-9, path.filename().string() + ": max diff " + std::to_string(worst));
        ++count;
    }
    c.require(count == 10, "expected 10 fixtures, found " + std::to_string(count));

    const auto p = load_program(fs::path(BLINDTELE_FIXTURES) / "n3_m1_J4.json");
    const std::uint64_t shots = 10000;
    const auto counts = prot3_histogram(p, 20261017, shots);
    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    }
    const double tv = total_variation(freq, oracle_simulate(p));
    c.require(tv <= 0.02, "sampled total variation " + std::to_string(tv));
    if (c.ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d fixtures, max diff %.2e; 10^4 shots TV %.4f", count, worst, tv);
        c.detail = buf;
    }
    return c;
}

Check communication() {
    Check c;
    for (const auto &path : fixtures()) {
        const auto p = load_program(path);
        const auto report = cost_report(prot3_run(p, 6).transcript, p);
        const long nx = static_cast<long>(p.n) * p.x;
        c.require(report.qubits_a2b == p.n + (p.J - 1) * nx && report.bits_b2a == (p.J - 1) * nx + p.n &&
                      report.counts_exact(),
                  path.filename().string() + ": counts differ");
        c.require(report.within_leading_order(), path.filename().string() + ": above nJx + n");
    }
    std::string trend;
    double last = 0.0;
    for (const char *name : {"n1_m1_J4.json", "n2_m1_J4.json", "n3_m1_J4.json"}) {
        const auto p = load_program(fs::path(BLINDTELE_FIXTURES) / name);
        const auto report = cost_report(prot3_run(p, 6).transcript, p);
        const double closed = static_cast<double>(p.J) * p.x * ((1 << p.n) - 1) /
                              static_cast<double>(p.n + (p.J - 1) * p.n * p.x);
        c.require(std::abs(report.ratio - closed) < 1e-12, std::string(name) + ": ratio differs from closed form");
        c.require(report.ratio > last, std::string(name) + ": ratio does not grow");
        last = report.ratio;
        char buf[48];
        std::snprintf(buf, sizeof buf, "%sn=%d %.3f", trend.empty() ? "" : ", ", p.n, report.ratio);
        trend += buf;
    }
    if (c.ok) {
        c.detail = "all fixtures exact; bound ratio " + trend;
    }
    return c;
}

Check early_halt() {
    Check c;
    Rng rng(1007);
    const int runs = 2000;
    long total_rounds = 0;
    for (int run = 0; run < runs; ++run) {
        const auto gate = DiagonalGate::random(1, DiagonalGate::kMaxLevel, rng);
        const auto psi = StateVector::random(1, rng);
        Rng bob = rng.derive("bob");
        SampledOutcomes outcomes(bob);
        const auto r = prot1_run(gate, 64, psi, outcomes, true);
        total_rounds += r.rounds;
        const double f = fidelity_to(r.final_state, r.byproduct, gate, psi);
        c.require(f >= 1.0 - kFidelityTol, "run " + std::to_string(run) + ": fidelity " + std::to_string(f));
    }
    const double mean = static_cast<double>(total_rounds) / runs;
    c.require(mean >= 1.8 && mean <= 2.2, "mean rounds " + std::to_string(mean));
    if (c.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "2000 runs, mean rounds %.4f, every run exact", mean);
        c.detail = buf;
    }
    return c;
}

Check cardinality() {
    Check c;
    const auto a = enumerate_gates(1, 2).size();
    const auto b = enumerate_gates(2, 1).size();
    c.require(a == 4 && a == static_cast<std::size_t>(gate_set_size(1, 2)), "(m=1, L=2) gave " + std::to_string(a));
    c.require(b == 8 && b == static_cast<std::size_t>(gate_set_size(2, 1)), "(m=2, L=1) gave " + std::to_string(b));
    if (c.ok) {
        c.detail = "(1,2) -> 4, (2,1) -> 8";
    }
    return c;
}

struct Criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<Check()> run;
};

}  // namespace
}  // namespace blindtele

int main() {
    using namespace blindtele;
    const std::vector<Criterion> criteria{
        {1, "teleportation postcondition", 5.0, teleport_postcondition},
        {2, "level reduction", 5.0, level_reduction},
        {3, "iterated telescoping", 0.0, prot1_telescoping},
        {4, "blind iterated correctness and blindness", 60.0, prot2_blindness},
        {5, "blind computation end to end", 120.0, prot3_end_to_end},
        {6, "communication accounting", 0.0, communication},
        {7, "early halt", 0.0, early_halt},
        {8, "gate set cardinality", 0.0, cardinality},
    };
    int failures = 0;
    for (const auto &cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception &e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.ok && cr.budget_seconds > 0.0 && seconds > cr.budget_seconds) {
            c.ok = false;
            c.detail += "; over the " + std::to_string(static_cast<int>(cr.budget_seconds)) + " s budget";
        }
        failures += c.ok ? 0 : 1;
        std::printf("criterion %d %-42s %s  %7.2f s  %s\n", cr.id, cr.name, c.ok ? "PASS" : "FAIL", seconds,
                    c.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
