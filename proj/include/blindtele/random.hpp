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
#include <random>
#include <string_view>

#include "blindtele/bits.hpp"

namespace blindtele {

/// Seedable generator. Every draw is built from raw engine output so that
/// results do not depend on the standard library's distribution classes.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Independent substream for `label` (e.g. "alice", "bob").
    static Rng derive(std::uint64_t seed, std::string_view label);
    Rng derive(std::string_view label);

    std::uint64_t next() { return engine_(); }
    std::uint8_t bit() { return static_cast<std::uint8_t>(engine_() >> 63); }
    Bits bits(int count);
    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    double normal();

  private:
    std::mt19937_64 engine_;
};

}  // namespace blindtele
