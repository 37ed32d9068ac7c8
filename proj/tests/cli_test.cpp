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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "blindtele/program.hpp"

namespace blindtele {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = BLINDTELE_FIXTURES;

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome run(const std::string &args) {
    const std::string cmd = std::string(BLINDTELE_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    Outcome o;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        o.out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

std::string fixture(const char *name) { return (kFixtures / name).string(); }

TEST(Cli, Demo) {
    EXPECT_EQ(run("demo --protocol 1 --m 2 --l 3 --seed 5").status, 0);
    EXPECT_EQ(run("demo --protocol 2 --m 1 --l 4 --identity").status, 0);
    EXPECT_EQ(run("demo --protocol 1 --m 1 --l 40 --early-halt").status, 0);
    const auto j = nlohmann::json::parse(run("demo --protocol 2 --m 2 --l 2 --seed 8 --json").out);
    EXPECT_NEAR(j.at("fidelity").get<double>(), 1.0, 1e-10);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("demo --m 0").status, 2);
    EXPECT_EQ(run("demo --protocol 3").status, 2);
    EXPECT_EQ(run("demo --no-such-flag").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("verify /nonexistent/program.json").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Verify) {
    EXPECT_EQ(run("verify " + fixture("n2_m1_J2.json")).status, 0);
    EXPECT_EQ(run("verify " + fixture("n1_m1_J4.json")).status, 0);

    const fs::path big = fs::temp_directory_path() / "blindtele_cli_n5.json";
    save_program(identity_program(5, 1, 2, 2), big);
    EXPECT_EQ(run("verify " + big.string()).status, 3);
    fs::remove(big);

    const fs::path bad = fs::temp_directory_path() / "blindtele_cli_bad.json";
    auto j = program_to_json(identity_program(2, 1, 2, 2));
    j["J"] = 3;
    std::ofstream(bad) << j.dump();
    EXPECT_EQ(run("verify " + bad.string()).status, 2);
    fs::remove(bad);
}

TEST(Cli, RunAndCosts) {
    const auto r = run("run " + fixture("n2_m2_J2.json") + " --samples 2000 --seed 3 --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j.at("tv_to_oracle").get<double>(), 0.05);
    EXPECT_EQ(run("costs " + fixture("n3_m1_J4.json")).status, 0);
    const auto c = nlohmann::json::parse(run("costs " + fixture("n3_m1_J4.json") + " --json").out);
    EXPECT_EQ(c.at("qubits_alice_to_bob"), 3 + 3 * 3 * 2);
}

TEST(Cli, Blindness) {
    EXPECT_EQ(run("blindness --m 1 --l 3 --trials 2").status, 0);
    EXPECT_EQ(run("blindness --m 4 --l 3").status, 3);
    EXPECT_EQ(run("blindness --m 7 --l 1").status, 2);
}

TEST(Cli, SeededOutputIsReproducible) {
    const std::string args = "run " + fixture("n2_m1_J4.json") + " --samples 300 --seed 77 --json";
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run("costs " + fixture("n2_m1_J4.json") + " --seed 4 --json");
    EXPECT_EQ(c.out, run("costs " + fixture("n2_m1_J4.json") + " --seed 4 --json").out);
}

}  // namespace
}  // namespace blindtele
