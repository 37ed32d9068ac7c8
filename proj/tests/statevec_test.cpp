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
#include <complex>
#include <cstring>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "blindtele/kernels.hpp"
#include "blindtele/pauli.hpp"
#include "blindtele/random.hpp"
#include "blindtele/state_vector.hpp"
#include "dense.hpp"

namespace blindtele {
namespace {

using C = std::complex<double>;

std::vector<C> random_amps(int n, Rng &rng) {
    std::vector<C> a(std::size_t{1} << n);
    for (auto &v : a) {
        v = C(rng.normal(), rng.normal());
    }
    return a;
}

bool bitwise_equal(const std::vector<C> &a, const std::vector<C> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(C)) == 0;
}

TEST(Kernels, SerialAndParallelAreBitwiseIdentical) {
    Rng rng(11);
    for (int n : {1, 3, 11, 12}) {
        const auto base = random_amps(n, rng);

        auto a = base, b = base;
        kernels::serial::walsh_hadamard(std::span<C>(a));
        kernels::omp::walsh_hadamard(std::span<C>(b));
        EXPECT_TRUE(bitwise_equal(a, b)) << "walsh_hadamard n=" << n;

        std::vector<C> diag(std::size_t{1} << std::min(n, 3));
        for (auto &d : diag) {
            d = std::polar(1.0, rng.uniform() * 6.0);
        }
        const int block = std::min(n, 3);
        a = base, b = base;
        kernels::serial::multiply_diagonal(a, n, n - block, block, diag);
        kernels::omp::multiply_diagonal(b, n, n - block, block, diag);
        EXPECT_TRUE(bitwise_equal(a, b)) << "multiply_diagonal n=" << n;

        a = base, b = base;
        kernels::serial::cz_ladder(a, n);
        kernels::omp::cz_ladder(b, n);
        EXPECT_TRUE(bitwise_equal(a, b)) << "cz_ladder n=" << n;

        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        const std::uint64_t xm = rng.next() & mask;
        const std::uint64_t zm = rng.next() & mask;
        a = base, b = base;
        kernels::serial::apply_pauli(a, xm, zm);
        kernels::omp::apply_pauli(b, xm, zm);
        EXPECT_TRUE(bitwise_equal(a, b)) << "apply_pauli n=" << n;

        if (n >= 2) {
            a = base, b = base;
            kernels::serial::cnot(a, n, n - 1, 0);
            kernels::omp::cnot(b, n, n - 1, 0);
            EXPECT_TRUE(bitwise_equal(a, b)) << "cnot n=" << n;
        }

        std::vector<double> pa(base.size()), pb(base.size());
        kernels::serial::probabilities(base, pa);
        kernels::omp::probabilities(base, pb);
        EXPECT_EQ(0, std::memcmp(pa.data(), pb.data(), pa.size() * sizeof(double)));

        std::vector<std::int64_t> ia(base.size()), ib;
        for (auto &v : ia) {
            v = static_cast<std::int64_t>(rng.next());
        }
        ib = ia;
        kernels::serial::walsh_hadamard(std::span<std::int64_t>(ia));
        kernels::omp::walsh_hadamard(std::span<std::int64_t>(ib));
        EXPECT_EQ(ia, ib);
    }
}

TEST(StateVector, PlusState) {
    const auto one = StateVector::plus(1);
    EXPECT_NEAR(one[0].real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(one[1].real(), std::sqrt(0.5), 1e-15);
    const auto two = StateVector::plus(2);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(two[i].real(), 0.5, 1e-15);
        EXPECT_NEAR(two[i].imag(), 0.0, 1e-15);
    }
    EXPECT_THROW(StateVector::plus(13), SizeError);
    EXPECT_THROW(StateVector::plus(0), SizeError);
    EXPECT_NO_THROW(StateVector::plus(StateVector::kMaxQubits));
}

TEST(StateVector, PauliAction) {
    const auto one = apply_pauli(StateVector::zero(1), PauliString::x_string({1}));
    EXPECT_NEAR(std::abs(one[1]), 1.0, 1e-15);

    const auto minus = apply_pauli(StateVector::plus(1), PauliString::z_string({1}));
    EXPECT_NEAR(minus[0].real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(minus[1].real(), -std::sqrt(0.5), 1e-15);

    Rng rng(3);
    const auto psi = StateVector::random(2, rng);
    const PauliString xz({1, 0}, {0, 1});
    EXPECT_NEAR(fidelity_up_to_phase(apply_pauli(apply_pauli(psi, xz), xz), psi), 1.0, 1e-12);

    EXPECT_THROW(apply_pauli(psi, xz, 1), std::out_of_range);
}

TEST(StateVector, PauliMatchesDenseOperator) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k + 1)));
        const Bits x = rng.bits(k);
        const Bits z = rng.bits(k);
        const auto psi = StateVector::random(n, rng);

        Bits fx(static_cast<std::size_t>(n), 0), fz = fx;
        std::copy(x.begin(), x.end(), fx.begin() + offset);
        std::copy(z.begin(), z.end(), fz.begin() + offset);
        const dense::Vec expected = dense::pauli(fx, fz) * dense::vec(psi);
        const auto got = apply_pauli(psi, PauliString(x, z), offset);
        EXPECT_NEAR(dense::fidelity(dense::vec(got), expected), 1.0, 1e-12);
        // Sign conventions match exactly, not only up to phase.
        EXPECT_LT((dense::vec(got) - expected).norm(), 1e-12);
    }
}

TEST(StateVector, HadamardLayer) {
    const auto zero = StateVector::zero(3);
    const auto uniform = apply_hadamard_all(zero);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(uniform[i].real(), 1.0 / std::sqrt(8.0), 1e-15);
    }

    Rng rng(9);
    const auto psi = StateVector::random(4, rng);
    EXPECT_NEAR(fidelity_up_to_phase(apply_hadamard_all(apply_hadamard_all(psi)), psi), 1.0, 1e-12);
    EXPECT_LT((dense::vec(apply_hadamard_all(psi)) - dense::hadamard_all(4) * dense::vec(psi)).norm(), 1e-12);

    const auto minus = apply_pauli(StateVector::plus(1), PauliString::z_string({1}));
    EXPECT_NEAR(std::abs(apply_hadamard_all(minus)[1]), 1.0, 1e-12);
}

TEST(StateVector, CzLadder) {
    Rng rng(13);
    const auto single = StateVector::random(1, rng);
    EXPECT_LT((dense::vec(apply_cz_ladder(single)) - dense::vec(single)).norm(), 1e-15);

    const auto eleven = apply_cz_ladder(StateVector::basis(2, 3));
    EXPECT_NEAR(eleven[3].real(), -1.0, 1e-15);

    for (int n = 2; n <= 5; ++n) {
        const auto psi = StateVector::random(n, rng);
        EXPECT_LT((dense::vec(apply_cz_ladder(psi)) - dense::cz_ladder(n) * dense::vec(psi)).norm(), 1e-12);
        EXPECT_LT((dense::vec(apply_cz_ladder(apply_cz_ladder(psi))) - dense::vec(psi)).norm(), 1e-12);
    }
}

TEST(StateVector, CnotTensorAndPermutation) {
    Rng rng(17);
    const auto a = StateVector::random(2, rng);
    const auto b = StateVector::random(2, rng);
    const auto ab = tensor(a, b);
    EXPECT_LT((dense::vec(ab) - dense::kron(dense::vec(a), dense::vec(b))).norm(), 1e-12);

    const auto cn = apply_cnot(ab, 3, 0);
    EXPECT_LT((dense::vec(cn) - dense::cnot(3, 0, 4) * dense::vec(ab)).norm(), 1e-12);

    const std::vector<int> swap_halves{2, 3, 0, 1};
    EXPECT_LT((dense::vec(permute_qubits(ab, swap_halves)) - dense::vec(tensor(b, a))).norm(), 1e-12);

    EXPECT_EQ(tensor(StateVector(), a).num_qubits(), 2);
}

TEST(StateVector, ApplyDiagonalOnBlock) {
    Rng rng(19);
    const auto psi = StateVector::random(4, rng);
    std::vector<C> d(4);
    for (auto &v : d) {
        v = std::polar(1.0, rng.uniform() * 6.0);
    }
    const auto got = apply_diagonal(psi, d, 1);
    const dense::Mat op = dense::kron(dense::kron(dense::eye(1), dense::diag(d)), dense::eye(1));
    EXPECT_LT((dense::vec(got) - op * dense::vec(psi)).norm(), 1e-12);
    EXPECT_THROW(apply_diagonal(psi, d, 3), std::out_of_range);
}

TEST(Measurement, SingleQubitOne) {
    Rng rng(1);
    const std::vector<int> q{0};
    const auto branch = measure_computational(StateVector::basis(1, 1), q, rng);
    EXPECT_EQ(branch.bits, Bits{1});
    EXPECT_EQ(branch.state.num_qubits(), 0);
    EXPECT_NEAR(branch.probability, 1.0, 1e-15);
}

TEST(Measurement, BellPairCollapses) {
    const auto pair = apply_cnot(tensor(StateVector::plus(1), StateVector::zero(1)), 0, 1);
    const std::vector<int> first{0};
    const auto branches = measure_branches(pair, first);
    ASSERT_EQ(branches.size(), 2u);
    for (const auto &b : branches) {
        EXPECT_NEAR(b.probability, 0.5, 1e-12);
        EXPECT_NEAR(std::abs(b.state[b.bits[0]]), 1.0, 1e-12);
    }
    Rng rng(4);
    int ones = 0;
    for (int i = 0; i < 2000; ++i) {
        ones += measure_computational(pair, first, rng).bits[0];
    }
    EXPECT_GT(ones, 900);
    EXPECT_LT(ones, 1100);
}

TEST(Measurement, ForcedOutcome) {
    const std::vector<int> q{0};
    const Bits zero{0};
    const auto branch = measure_forced(StateVector::plus(1), q, zero);
    EXPECT_EQ(branch.bits, zero);
    EXPECT_NEAR(branch.probability, 0.5, 1e-15);
    EXPECT_THROW(measure_forced(StateVector::zero(1), q, Bits{1}), std::domain_error);
}

TEST(Measurement, BranchWeightsSumToOne) {
    Rng rng(23);
    for (int n = 1; n <= 6; ++n) {
        const auto psi = StateVector::random(n, rng);
        std::vector<int> qubits;
        for (int q = 0; q < n; q += 2) {
            qubits.push_back(q);
        }
        double total = 0.0;
        for (const auto &b : measure_branches(psi, qubits)) {
            total += b.probability;
            EXPECT_NEAR(b.state.norm_squared(), 1.0, 1e-12);
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
        const auto probs = outcome_probabilities(psi, qubits);
        EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-10);
    }
}

TEST(Measurement, XBasis) {
    Rng rng(29);
    EXPECT_EQ(measure_x_all(StateVector::plus(4), rng), Bits(4, 0));
    const auto minus = apply_pauli(StateVector::plus(1), PauliString::z_string({1}));
    EXPECT_EQ(measure_x_all(minus, rng), Bits{1});
    for (int trial = 0; trial < 10; ++trial) {
        const Bits r = rng.bits(5);
        EXPECT_EQ(measure_x_all(apply_pauli(StateVector::plus(5), PauliString::z_string(r)), rng), r);
    }
}

TEST(Fidelity, Basics) {
    Rng rng(31);
    const auto psi = StateVector::random(3, rng);
    EXPECT_NEAR(fidelity_up_to_phase(psi, psi), 1.0, 1e-14);
    std::vector<C> rotated(psi.amplitudes().begin(), psi.amplitudes().end());
    for (auto &a : rotated) {
        a *= std::polar(1.0, 0.7);
    }
    EXPECT_NEAR(fidelity_up_to_phase(psi, StateVector::from_amplitudes(rotated)), 1.0, 1e-14);
    EXPECT_NEAR(fidelity_up_to_phase(StateVector::basis(1, 0), StateVector::basis(1, 1)), 0.0, 1e-15);
    EXPECT_THROW(fidelity_up_to_phase(psi, StateVector::zero(2)), std::invalid_argument);
}

TEST(StateVector, NormPreservedByEveryOperation) {
    Rng rng(37);
    auto psi = StateVector::random(6, rng);
    for (int step = 0; step < 50; ++step) {
        switch (rng.below(4)) {
        case 0:
            psi = apply_hadamard_all(psi);
            break;
        case 1:
            psi = apply_cz_ladder(psi);
            break;
        case 2:
            psi = apply_pauli(psi, PauliString(rng.bits(6), rng.bits(6)));
            break;
        default:
            psi = apply_cnot(psi, 0, 5);
        }
        EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-10);
    }
}

TEST(Pauli, ProductIsXor) {
    const PauliString a({1, 0, 1}, {0, 1, 1});
    const PauliString b({1, 1, 0}, {0, 1, 0});
    const auto ab = a * b;
    EXPECT_EQ(ab.x_bits(), (Bits{0, 1, 1}));
    EXPECT_EQ(ab.z_bits(), (Bits{0, 0, 1}));
    EXPECT_TRUE((a * a).is_identity());
    EXPECT_EQ(a.str(), "XZY");
    EXPECT_EQ(a.x_mask(), 0b101u);
    EXPECT_THROW(PauliString(Bits{1}, Bits{1, 0}), std::invalid_argument);
}

TEST(Rng, DeterministicAndLabelled) {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a.next(), b.next());
    }
    Rng alice = Rng::derive(42, "alice");
    Rng bob = Rng::derive(42, "bob");
    EXPECT_NE(alice.next(), bob.next());
    Rng again = Rng::derive(42, "alice");
    Rng alice2 = Rng::derive(42, "alice");
    EXPECT_EQ(again.next(), alice2.next());
}

TEST(Rng, DrawsStayInRange) {
    Rng rng(7);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ++counts[rng.below(6)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 500);
    }
    EXPECT_EQ(rng.below(0), 0u);
}

}  // namespace
}  // namespace blindtele
