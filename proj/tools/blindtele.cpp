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

// Command-line front end: single-gate demos, blind-computation runs,
// exhaustive verification, blindness certification and cost reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 resource cap exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blindtele/blind_computation.hpp"
#include "blindtele/blindness.hpp"
#include "blindtele/costs.hpp"
#include "blindtele/iterated.hpp"
#include "blindtele/oracle.hpp"
#include "blindtele/program.hpp"

namespace {

using namespace blindtele;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

constexpr double kFidelityTolerance = 1e-8;
constexpr double kExactTolerance = 1e-9;

struct Options {
    int protocol = 1;
    int m = 1;
    int l = 2;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    int trials = 1;
    bool json = false;
    bool early_halt = false;
    bool identity = false;
    std::string program;
    std::string transcript;
};

void emit(const Options &opt, const json &report, const std::string &text) {
    if (opt.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string fmt(double v, const char *format = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

int cmd_demo(const Options &opt) {
    if (opt.protocol == 2 && opt.early_halt) {
        std::cerr << "error: --early-halt is only available for protocol 1\n";
        return kUsage;
    }
    Rng gate_rng = Rng::derive(opt.seed, "gate");
    Rng input_rng = Rng::derive(opt.seed, "input");
    Rng alice = Rng::derive(opt.seed, "alice");
    Rng bob = Rng::derive(opt.seed, "bob");
    const DiagonalGate gate = opt.identity ? DiagonalGate(opt.m) : DiagonalGate::random(opt.m, opt.l, gate_rng);
    const StateVector psi = StateVector::random(opt.m, input_rng);

    SampledOutcomes outcomes(bob);
    RandomPads pads(alice);
    const IteratedResult r = opt.protocol == 1 ? prot1_run(gate, opt.l, psi, outcomes, opt.early_halt)
                                               : prot2_run(gate, opt.l, psi, pads, outcomes);
    StateVector expected = apply_diagonal(psi, gate.to_unitary_diag());
    expected = apply_pauli(std::move(expected), r.key * r.byproduct);
    const double fidelity = fidelity_up_to_phase(r.final_state, expected);
    const bool ok = fidelity >= 1.0 - kFidelityTolerance;

    json report{{"command", "demo"},
                {"protocol", opt.protocol},
                {"m", opt.m},
                {"l", opt.l},
                {"seed", opt.seed},
                {"gate_level", gate.level()},
                {"rounds", r.rounds},
                {"byproduct", r.byproduct.str()},
                {"fidelity", fidelity},
                {"qubits_alice_to_bob", r.transcript.qubits_alice_to_bob()},
                {"bits_bob_to_alice", r.transcript.bits_bob_to_alice()},
                {"ok", ok}};
    std::string text = "protocol " + std::to_string(opt.protocol) + "  m=" + std::to_string(opt.m) +
                       "  l=" + std::to_string(opt.l) + "  seed=" + std::to_string(opt.seed) + "\n";
    text += "gate level          " + std::to_string(gate.level()) + "\n";
    text += "rounds run          " + std::to_string(r.rounds) + "\n";
    text += "byproduct           " + r.byproduct.str() + "\n";
    if (opt.protocol == 2) {
        report["key"] = r.key.str();
        text += "key (Alice only)    " + r.key.str() + "\n";
    }
    text += "fidelity            " + fmt(fidelity, "%.12f") + "\n";
    text += "qubits Alice->Bob   " + std::to_string(r.transcript.qubits_alice_to_bob()) + "\n";
    text += "bits Bob->Alice     " + std::to_string(r.transcript.bits_bob_to_alice()) + "\n";
    emit(opt, report, text);
    return ok ? kOk : kFailed;
}

json histogram_json(const std::vector<std::uint64_t> &counts, int n) {
    json out = json::object();
    for (std::uint64_t o = 0; o < counts.size(); ++o) {
        if (counts[o] != 0) {
            out[to_string(from_mask(o, n))] = counts[o];
        }
    }
    return out;
}

int write_transcript(const Options &opt, const Transcript &t) {
    if (opt.transcript.empty()) {
        return kOk;
    }
    std::ofstream out(opt.transcript);
    if (!out) {
        std::cerr << "error: cannot write " << opt.transcript << "\n";
        return kUsage;
    }
    t.write_jsonl(out);
    return kOk;
}

int cmd_run(const Options &opt) {
    const Program program = load_program(opt.program);
    const auto counts = prot3_histogram(program, opt.seed, opt.samples);
    const BlindResult first = prot3_run(program, opt.seed);
    if (int rc = write_transcript(opt, first.transcript); rc != kOk) {
        return rc;
    }
    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(std::max<std::uint64_t>(opt.samples, 1));
    }
    const double tv = total_variation(freq, oracle_simulate(program));

    json report{{"command", "run"},
                {"program", opt.program},
                {"seed", opt.seed},
                {"samples", opt.samples},
                {"histogram", histogram_json(counts, program.n)},
                {"tv_to_oracle", tv}};
    std::string text = "samples " + std::to_string(opt.samples) + "  seed " + std::to_string(opt.seed) + "\n";
    for (std::uint64_t o = 0; o < counts.size(); ++o) {
        if (counts[o] != 0) {
            text += "  " + to_string(from_mask(o, program.n)) + "  " + std::to_string(counts[o]) + "\n";
        }
    }
    text += "total variation to oracle  " + fmt(tv, "%.6f") + "\n";
    emit(opt, report, text);
    return kOk;
}

int cmd_verify(const Options &opt) {
    const Program program = load_program(opt.program);
    if (program.n > 3 || program.J > 4) {
        std::cerr << "error: exhaustive verification is capped at n <= 3 and J <= 4; use `run` to sample\n";
        return kCap;
    }
    const auto exact = prot3_exact_distribution(program);
    const auto oracle = oracle_simulate(program);
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        worst = std::max(worst, std::abs(exact[i] - oracle[i]));
    }
    const bool ok = worst <= kExactTolerance;
    json report{{"command", "verify"},
                {"program", opt.program},
                {"max_abs_diff", worst},
                {"protocol", exact},
                {"oracle", oracle},
                {"ok", ok}};
    std::string text;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        text += "  " + to_string(from_mask(i, program.n)) + "  protocol " + fmt(exact[i], "%.12f") + "  oracle " +
                fmt(oracle[i], "%.12f") + "\n";
    }
    text += std::string("max |diff| ") + fmt(worst, "%.3e") + (ok ? "  OK\n" : "  MISMATCH\n");
    emit(opt, report, text);
    return ok ? kOk : kFailed;
}

int cmd_blindness(const Options &opt) {
    if (opt.m * opt.l > kMaxViewQubits) {
        std::cerr << "error: m * l = " << opt.m * opt.l << " exceeds the enumeration cap of " << kMaxViewQubits
                  << "\n";
        return kCap;
    }
    Rng gate_rng = Rng::derive(opt.seed, "gate");
    Rng input_rng = Rng::derive(opt.seed, "input");
    json distances = json::array();
    double worst = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
        const DiagonalGate gate = DiagonalGate::random(opt.m, opt.l, gate_rng);
        const StateVector psi = StateVector::random(opt.m, input_rng);
        const double d = blindness_distance(gate, opt.l, psi);
        distances.push_back(d);
        worst = std::max(worst, d);
    }
    const bool ok = worst <= kExactTolerance;
    json report{{"command", "blindness"}, {"m", opt.m},         {"l", opt.l},   {"seed", opt.seed},
                {"trials", opt.trials},   {"distances", distances}, {"max_distance", worst}, {"ok", ok}};
    std::string text = "m=" + std::to_string(opt.m) + "  l=" + std::to_string(opt.l) +
                       "  trials=" + std::to_string(opt.trials) + "\n";
    text += "max trace distance to I/2^(ml)  " + fmt(worst, "%.3e") + (ok ? "  OK\n" : "  FAIL\n");
    emit(opt, report, text);
    return ok ? kOk : kFailed;
}

int cmd_costs(const Options &opt) {
    const Program program = load_program(opt.program);
    const BlindResult r = prot3_run(program, opt.seed);
    if (int rc = write_transcript(opt, r.transcript); rc != kOk) {
        return rc;
    }
    const CostReport report = cost_report(r.transcript, program);
    json j = report.to_json();
    j["command"] = "costs";
    j["program"] = opt.program;
    emit(opt, j, report.to_text());
    return report.counts_exact() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Blind quantum computation by iterated gate teleportation"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App *sub) {
        sub->add_option("--seed", opt.seed, "Seed for every random choice");
        sub->add_flag("--json", opt.json, "Print a JSON report");
    };

    auto *demo = app.add_subcommand("demo", "Teleport one random gate with the iterated protocol");
    demo->add_option("--protocol", opt.protocol, "1: iterated, 2: blind iterated")->check(CLI::IsMember({1, 2}));
    demo->add_option("--m", opt.m, "Gate width in qubits")->check(CLI::Range(1, 6));
    demo->add_option("--l", opt.l, "Rounds, and the gate's dyadic level")->check(CLI::Range(1, DiagonalGate::kMaxLevel));
    demo->add_flag("--early-halt", opt.early_halt, "Stop at the first all-zero outcome (protocol 1)");
    demo->add_flag("--identity", opt.identity, "Teleport the identity gate");
    add_common(demo);

    auto *run = app.add_subcommand("run", "Sample the blind computation of a program");
    run->add_option("program", opt.program, "Program JSON file")->required();
    run->add_option("--samples", opt.samples, "Number of runs")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    run->add_option("--transcript", opt.transcript, "Write the first run's transcript as JSON lines");
    add_common(run);

    auto *verify = app.add_subcommand("verify", "Compare the exact protocol distribution with direct simulation");
    verify->add_option("program", opt.program, "Program JSON file")->required();
    add_common(verify);

    auto *blind = app.add_subcommand("blindness", "Distance of Bob's averaged view from maximally mixed");
    blind->add_option("--m", opt.m, "Gate width in qubits")->check(CLI::Range(1, 6));
    blind->add_option("--l", opt.l, "Rounds")->check(CLI::Range(1, 10));
    blind->add_option("--trials", opt.trials, "Random gates to check")->check(CLI::Range(1, 1000));
    add_common(blind);

    auto *costs = app.add_subcommand("costs", "Communication report for one run of a program");
    costs->add_option("program", opt.program, "Program JSON file")->required();
    costs->add_option("--transcript", opt.transcript, "Write the transcript as JSON lines");
    add_common(costs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*demo) {
            return cmd_demo(opt);
        }
        if (*run) {
            return cmd_run(opt);
        }
        if (*verify) {
            return cmd_verify(opt);
        }
        if (*blind) {
            return cmd_blindness(opt);
        }
        return cmd_costs(opt);
    } catch (const SchemaError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
