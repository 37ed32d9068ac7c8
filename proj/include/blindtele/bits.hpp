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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blindtele {

/// One entry per qubit, each 0 or 1. Entry 0 is qubit 1, the most
/// significant bit of a basis index.
using Bits = std::vector<std::uint8_t>;

/// Packs bits into an integer mask; bits[0] lands on bit (size - 1).
inline std::uint64_t to_mask(std::span<const std::uint8_t> bits) {
    std::uint64_t mask = 0;
    for (std::uint8_t b : bits) {
        mask = (mask << 1) | (b & 1u);
    }
    return mask;
}

inline Bits from_mask(std::uint64_t mask, int width) {
    Bits out(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> (width - 1 - i)) & 1u);
    }
    return out;
}

inline Bits xor_bits(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor_bits: length mismatch");
    }
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((a[i] ^ b[i]) & 1u);
    }
    return out;
}

inline bool all_zero(std::span<const std::uint8_t> bits) {
    for (std::uint8_t b : bits) {
        if (b) {
            return false;
        }
    }
    return true;
}

inline std::string to_string(std::span<const std::uint8_t> bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

inline int parity(std::uint64_t v) { return __builtin_popcountll(v) & 1; }

}  // namespace blindtele
