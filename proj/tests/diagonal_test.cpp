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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "blindtele/diagonal_gate.hpp"
#include "blindtele/gate_json.hpp"
#include "dense.hpp"

namespace blindtele {
namespace {

using dense::Mat;

std::vector<std::int64_t> table(std::initializer_list<std::int64_t> v) { return v; }

Mat matrix(const DiagonalGate &g) { return dense::diag(g.to_unitary_diag()); }

/// Independent construction of the gate: exp(i sum_j theta_j Z^j) from the
/// numerator table.
Mat reference(const DiagonalGate &g) {
    std::vector<double> theta(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        theta[j] = static_cast<double>(g.numerator(j)) * std::numbers::pi / std::ldexp(1.0, g.level());
    }
    return dense::diagonal_exp(g.num_qubits(), theta);
}

Bits bits_of(std::uint64_t mask, int m) { return from_mask(mask, m); }

TEST(DiagonalGate, PhaseNumeratorExamples) {
    const DiagonalGate id(2);
    for (std::uint64_t b = 0; b < 4; ++b) {
        EXPECT_EQ(id.phase_numerator(b), 0u);
    }

    const auto half = DiagonalGate::from_numerators(1, 1, table({0, 1}));
    EXPECT_EQ(half.phase_numerator(0), 1u);
    EXPECT_EQ(half.phase_numerator(1), 3u);
    const auto d = half.to_unitary_diag();
    EXPECT_NEAR(std::abs(d[0] - std::complex<double>(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[1] - std::complex<double>(0, -1)), 0.0, 1e-15);

    const auto zz = DiagonalGate::from_numerators(2, 2, table({0, 0, 0, 1}));
    EXPECT_EQ(zz.phase_numerator(0b01), 7u);
}

TEST(DiagonalGate, IdentityDiagonalIsOnes) {
    for (const auto &v : DiagonalGate(3).to_unitary_diag()) {
        EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
    }
}

TEST(DiagonalGate, CanonicalForm) {
    // The identity term is dropped, even tables drop a level, and r_j is
    // reduced mod 2^L.
    const auto g = DiagonalGate::from_numerators(1, 2, table({3, 2}));
    EXPECT_EQ(g.level(), 1);
    EXPECT_EQ(g.numerator(0), 0u);
    EXPECT_EQ(g.numerator(1), 1u);
    EXPECT_TRUE(DiagonalGate::from_numerators(1, 2, table({0, 4})).is_identity());
    EXPECT_EQ(DiagonalGate::from_numerators(1, 2, table({0, -1})).numerator(1), 3u);
    EXPECT_TRUE(g.in_level(1));
    EXPECT_TRUE(g.in_level(5));
    EXPECT_FALSE(DiagonalGate::from_numerators(1, 3, table({0, 1})).in_level(2));
}

TEST(DiagonalGate, UnitaryMatchesMatrixExponential) {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const int level = static_cast<int>(rng.below(6));
        const auto g = DiagonalGate::random(m, level, rng);
        EXPECT_LT((matrix(g) - reference(g)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(DiagonalGate, TwoRepresentationsAgree) {
    Rng rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(4));
        const auto g = DiagonalGate::random(m, 1 + static_cast<int>(rng.below(8)), rng);
        const auto all = g.phase_numerators();
        for (std::uint64_t b = 0; b < g.size(); ++b) {
            EXPECT_EQ(all[b], g.phase_numerator(b));
        }
        EXPECT_EQ(DiagonalGate::from_real_phases(m, g.level(), g.real_phases()), g);
    }
    const std::vector<double> off{0.1, -0.1};
    EXPECT_THROW(DiagonalGate::from_real_phases(1, 3, off), std::domain_error);
}

TEST(ConjugateUpdate, Examples) {
    Rng rng(107);
    const auto g = DiagonalGate::random(3, 4, rng);
    EXPECT_TRUE(g.conjugate_update(0).is_identity());

    for (std::uint64_t a = 0; a < 2; ++a) {
        EXPECT_TRUE(DiagonalGate::z_string(1, 1).conjugate_update(a).is_identity());
    }

    const auto quarter = DiagonalGate::from_numerators(1, 2, table({0, 1}));
    const auto next = quarter.conjugate_update(1);
    EXPECT_EQ(next.level(), 1);
    EXPECT_EQ(next.numerator(1), 1u);
    const Mat x = dense::pauli_x();
    EXPECT_TRUE(dense::equal_up_to_phase(matrix(next), x * matrix(quarter) * x * matrix(quarter).adjoint(), 1e-12));
}

TEST(ConjugateUpdate, LowersLevelAndMatchesMatrixProduct) {
    Rng rng(109);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const int level = 1 + static_cast<int>(rng.below(5));
        const auto g = DiagonalGate::random(m, level, rng);
        const std::uint64_t a = rng.below(std::uint64_t{1} << m);
        const auto next = g.conjugate_update(a);
        EXPECT_LE(next.level(), std::max(0, g.level() - 1));
        const Mat xa = dense::pauli(bits_of(a, m), Bits(static_cast<std::size_t>(m), 0));
        const Mat product = xa * reference(g) * xa * reference(g).adjoint();
        EXPECT_TRUE(dense::equal_up_to_phase(matrix(next), product, 1e-10));
    }
}

TEST(DiagonalGate, LevelOneGatesAreZStringsUpToSign) {
    for (const auto &g : enumerate_gates(2, 1)) {
        for (std::uint64_t a = 0; a < 4; ++a) {
            const Mat xa = dense::pauli(bits_of(a, 2), Bits(2, 0));
            const Mat dx = matrix(g) * xa;
            const Mat xd = xa * matrix(g);
            EXPECT_TRUE((dx - xd).norm() < 1e-12 || (dx + xd).norm() < 1e-12);
        }
    }
}

TEST(CorrectionFrame, Examples) {
    Rng rng(113);
    const auto g = DiagonalGate::random(2, 3, rng);
    EXPECT_EQ(g.correction_frame(0, 0), g);

    const auto z = DiagonalGate(3).correction_frame(0, 0b010);
    EXPECT_EQ(z, DiagonalGate::z_string(3, 0b010));
    EXPECT_EQ(z.level(), 1);

    const auto quarter = DiagonalGate::from_numerators(1, 2, table({0, 1}));
    const auto flipped = quarter.correction_frame(1, 0);
    EXPECT_EQ(flipped.level(), 2);
    EXPECT_EQ(flipped.numerator(1), 3u);
    const Mat x = dense::pauli_x();
    EXPECT_TRUE(dense::equal_up_to_phase(matrix(flipped), x * matrix(quarter) * x, 1e-12));
}

TEST(CorrectionFrame, MatchesMatrixProductAndPhaseFormula) {
    Rng rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const auto g = DiagonalGate::random(m, static_cast<int>(rng.below(5)), rng);
        const std::uint64_t chi = rng.below(std::uint64_t{1} << m);
        const std::uint64_t zeta = rng.below(std::uint64_t{1} << m);
        const auto f = g.correction_frame(chi, zeta);
        EXPECT_LE(f.level(), std::max(g.level(), 1));

        const Bits none(static_cast<std::size_t>(m), 0);
        const Mat xc = dense::pauli(bits_of(chi, m), none);
        const Mat zz = dense::pauli(none, bits_of(zeta, m));
        const Mat product = xc * reference(g) * zz * xc;
        // Diagonal: no off-diagonal action is created.
        EXPECT_LT((product - Mat(product.diagonal().asDiagonal())).norm(), 1e-12);
        EXPECT_TRUE(dense::equal_up_to_phase(matrix(f), product, 1e-10));

        // phi'(b) = phi(b ^ chi) + pi * (zeta . (b ^ chi)).
        const auto phi = g.real_phases();
        const auto phi2 = f.real_phases();
        for (std::uint64_t b = 0; b < g.size(); ++b) {
            const double want = phi[b ^ chi] + std::numbers::pi * parity(zeta & (b ^ chi));
            const double delta = (phi2[b] - phi2[0]) - (want - (phi[chi] + std::numbers::pi * parity(zeta & chi)));
            EXPECT_NEAR(std::remainder(delta, 2 * std::numbers::pi), 0.0, 1e-9);
        }
    }
}

TEST(Compose, DaggerAndProducts) {
    Rng rng(131);
    EXPECT_TRUE(DiagonalGate(2).dagger().is_identity());
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(3));
        const auto a = DiagonalGate::random(m, static_cast<int>(rng.below(5)), rng);
        const auto b = DiagonalGate::random(m, static_cast<int>(rng.below(5)), rng);
        EXPECT_TRUE(compose(a, a.dagger()).is_identity());
        EXPECT_TRUE(dense::equal_up_to_phase(matrix(compose(a, b)), matrix(a) * matrix(b), 1e-10));
    }
    EXPECT_THROW(compose(DiagonalGate(1), DiagonalGate(2)), std::invalid_argument);
}

TEST(Enumeration, CardinalityMatchesFormula) {
    EXPECT_EQ(enumerate_gates(1, 2).size(), 4u);
    EXPECT_EQ(enumerate_gates(2, 1).size(), 8u);
    for (auto [m, level] : {std::pair{1, 3}, {2, 2}, {3, 1}, {1, 0}}) {
        const auto gates = enumerate_gates(m, level);
        const double expected = std::pow(std::pow(2.0, level), std::pow(2.0, m) - 1);
        EXPECT_EQ(static_cast<double>(gates.size()), expected) << "m=" << m << " L=" << level;
        std::set<std::pair<int, std::vector<std::uint64_t>>> distinct;
        for (const auto &g : gates) {
            EXPECT_TRUE(g.in_level(level));
            distinct.emplace(g.level(), std::vector<std::uint64_t>(g.numerators().begin(), g.numerators().end()));
        }
        EXPECT_EQ(distinct.size(), gates.size());
    }
    EXPECT_THROW(enumerate_gates(3, 4), std::length_error);
}

TEST(Enumeration, CanonicalTablesCanShareAnOperator) {
    // Z1, Z2 and Z1Z2 multiply to the identity, so the eight level-1 tables
    // at m = 2 give only four operators up to phase.
    const auto gates = enumerate_gates(2, 1);
    std::vector<DiagonalGate> operators;
    for (const auto &g : gates) {
        bool seen = false;
        for (const auto &o : operators) {
            seen = seen || o.same_unitary(g);
        }
        if (!seen) {
            operators.push_back(g);
        }
    }
    EXPECT_EQ(operators.size(), 4u);
    // At m = 1 tables and operators coincide.
    const auto single = enumerate_gates(1, 2);
    for (std::size_t i = 0; i < single.size(); ++i) {
        for (std::size_t j = i + 1; j < single.size(); ++j) {
            EXPECT_FALSE(single[i].same_unitary(single[j]));
        }
    }
}

TEST(GateJson, RoundTrip) {
    Rng rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = DiagonalGate::random(1 + static_cast<int>(rng.below(3)), static_cast<int>(rng.below(6)), rng);
        EXPECT_EQ(gate_from_json(gate_to_json(g), ""), g);
    }
    const auto j = gate_to_json(DiagonalGate::from_numerators(1, 2, table({0, 1})));
    EXPECT_EQ(j.at("m"), 1);
    EXPECT_EQ(j.at("level"), 2);
    EXPECT_EQ(j.at("numerators"), nlohmann::json::array({0, 1}));
}

TEST(GateJson, SchemaErrorsNameTheField) {
    auto expect_field = [](const nlohmann::json &j, const std::string &field) {
        try {
            gate_from_json(j, "/g");
            ADD_FAILURE() << "accepted " << j.dump();
        } catch (const SchemaError &e) {
            EXPECT_EQ(e.field(), field);
        }
    };
    expect_field(nlohmann::json::array(), "/g");
    expect_field({{"level", 1}, {"numerators", {0, 1}}}, "/g/m");
    expect_field({{"m", 1}, {"level", 1}, {"numerators", {0, 1, 1}}}, "/g/numerators");
    expect_field({{"m", 1}, {"level", 1}, {"numerators", {0, "a"}}}, "/g/numerators/1");
    expect_field({{"m", 1}, {"level", 99}, {"numerators", {0, 1}}}, "/g/level");
    expect_field({{"m", 0}, {"level", 1}, {"numerators", {0}}}, "/g/m");
}

}  // namespace
}  // namespace blindtele
