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

#include "blindtele/bits.hpp"

namespace blindtele {

/// Tensor product of X^{x_k} Z^{z_k}, tracked without its global phase.
/// Products compose by XOR, so the set forms a group modulo phase.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int num_qubits);
    PauliString(Bits x_bits, Bits z_bits);

    static PauliString x_string(Bits bits);
    static PauliString z_string(Bits bits);

    int num_qubits() const { return static_cast<int>(x_.size()); }
    const Bits &x_bits() const { return x_; }
    const Bits &z_bits() const { return z_; }
    std::uint64_t x_mask() const { return to_mask(x_); }
    std::uint64_t z_mask() const { return to_mask(z_); }
    bool is_identity() const { return all_zero(x_) && all_zero(z_); }

    /// Product up to phase; both operands must have the same width.
    PauliString &operator*=(const PauliString &other);
    friend PauliString operator*(PauliString a, const PauliString &b) { return a *= b; }
    bool operator==(const PauliString &) const = default;

    /// "XZ_Y" style rendering: I, X, Z or Y per qubit.
    std::string str() const;

  private:
    Bits x_;
    Bits z_;
};

}  // namespace blindtele
