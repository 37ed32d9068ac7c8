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

#include "blindtele/blindness.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "blindtele/blind_computation.hpp"
#include "blindtele/iterated.hpp"

namespace blindtele {

namespace {

/// Tensor product of the quantum payloads recorded after entry `from`.
Eigen::VectorXcd payloads_since(const Transcript &t, std::size_t from) {
    StateVector joint;
    for (std::size_t i = from; i < t.entries().size(); ++i) {
        const auto &e = t.entries()[i];
        if (e.payload) {
            joint = tensor(joint, *e.payload);
        }
    }
    const auto amps = joint.amplitudes();
    return Eigen::Map<const Eigen::VectorXcd>(amps.data(), static_cast<Eigen::Index>(amps.size()));
}

/// rho(node) = sum over children of weight * |new messages><new messages|
/// (x) rho(child). Every branch sends the same number of qubits, so the
/// children's views have equal size.
template <SteppedSession S>
DensityMatrix view_of(const S &session) {
    const Pending p = session.pending();
    if (p.what == Await::Finished) {
        return DensityMatrix::Ones(1, 1);
    }
    DensityMatrix acc;
    auto add = [&acc](const DensityMatrix &term) {
        if (acc.size() == 0) {
            acc = term;
        } else {
            acc += term;
        }
    };
    if (p.what == Await::AlicePads) {
        const std::uint64_t count = std::uint64_t{1} << p.bits;
        const double w = 1.0 / static_cast<double>(count);
        const std::size_t before = session.transcript().entries().size();
        for (std::uint64_t word = 0; word < count; ++word) {
            S child = session;
            child.supply_pads(from_mask(word, p.bits));
            const Eigen::VectorXcd v = payloads_since(child.transcript(), before);
            const DensityMatrix sent = w * (v * v.adjoint());
            add(Eigen::kroneckerProduct(sent, view_of(child)).eval());
        }
    } else {
        const auto probs = session.outcome_probabilities();
        for (std::uint64_t o = 0; o < probs.size(); ++o) {
            if (probs[o] <= kBranchCutoff) {
                continue;
            }
            S child = session;
            const double born = child.supply_outcome(from_mask(o, p.bits));
            add(born * view_of(child));
        }
    }
    return acc;
}

void check_view_size(long qubits) {
    if (qubits > kMaxViewQubits) {
        throw SizeError("a view over " + std::to_string(qubits) + " message qubits exceeds the cap of " +
                        std::to_string(kMaxViewQubits));
    }
}

}  // namespace

DensityMatrix prot2_view(const DiagonalGate &gate, int rounds, const StateVector &psi) {
    check_view_size(static_cast<long>(gate.num_qubits()) * rounds);
    const IteratedSession root(gate, rounds, psi, {.blind = true, .keep_payloads = true});
    return view_of(root);
}

DensityMatrix prot3_view(const Program &program) {
    program.validate();
    check_view_size(program.n + static_cast<long>(program.J - 1) * program.n * program.x);
    const BlindComputationSession root(program, {.keep_payloads = true});
    return view_of(root);
}

DensityMatrix maximally_mixed(int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return DensityMatrix::Identity(dim, dim) / static_cast<double>(dim);
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    const Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(a - b, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("trace_distance: eigensolver did not converge");
    }
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double blindness_distance(const DiagonalGate &gate, int rounds, const StateVector &psi) {
    return trace_distance(prot2_view(gate, rounds, psi), maximally_mixed(gate.num_qubits() * rounds));
}

double blindness_distance(const DiagonalGate &gate, int rounds) {
    return blindness_distance(gate, rounds, StateVector::zero(gate.num_qubits()));
}

}  // namespace blindtele
