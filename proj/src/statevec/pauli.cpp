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

#include "blindtele/pauli.hpp"

#include <stdexcept>
#include <utility>

namespace blindtele {

PauliString::PauliString(int num_qubits)
    : x_(static_cast<std::size_t>(num_qubits), 0), z_(static_cast<std::size_t>(num_qubits), 0) {}

PauliString::PauliString(Bits x_bits, Bits z_bits) : x_(std::move(x_bits)), z_(std::move(z_bits)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliString: x and z lengths differ");
    }
}

PauliString PauliString::x_string(Bits bits) {
    Bits z(bits.size(), 0);
    return {std::move(bits), std::move(z)};
}

PauliString PauliString::z_string(Bits bits) {
    Bits x(bits.size(), 0);
    return {std::move(x), std::move(bits)};
}

PauliString &PauliString::operator*=(const PauliString &other) {
    x_ = xor_bits(x_, other.x_);
    z_ = xor_bits(z_, other.z_);
    return *this;
}

std::string PauliString::str() const {
    std::string s;
    for (std::size_t k = 0; k < x_.size(); ++k) {
        s.push_back(x_[k] ? (z_[k] ? 'Y' : 'X') : (z_[k] ? 'Z' : 'I'));
    }
    return s;
}

}  // namespace blindtele
