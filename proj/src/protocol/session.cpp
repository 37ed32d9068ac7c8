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

#include "blindtele/session.hpp"

#include <cmath>
#include <cstring>

namespace blindtele {

Bits ScriptedPads::draw(int count) {
    if (next_ >= script_.size()) {
        return Bits(static_cast<std::size_t>(count), 0);
    }
    Bits b = script_[next_++];
    if (static_cast<int>(b.size()) != count) {
        throw std::invalid_argument("scripted pad word has the wrong width");
    }
    return b;
}

Bits SampledOutcomes::choose(std::span<const double> probabilities, int bits) {
    const double u = rng_.uniform();
    double acc = 0.0;
    std::uint64_t pick = 0;
    for (std::uint64_t o = 0; o < probabilities.size(); ++o) {
        if (probabilities[o] > kBranchCutoff) {
            pick = o;
        }
        acc += probabilities[o];
        if (u < acc && probabilities[o] > kBranchCutoff) {
            break;
        }
    }
    return from_mask(pick, bits);
}

Bits ScriptedOutcomes::choose(std::span<const double> /*probabilities*/, int bits) {
    if (next_ >= script_.size()) {
        return Bits(static_cast<std::size_t>(bits), 0);
    }
    Bits b = script_[next_++];
    if (static_cast<int>(b.size()) != bits) {
        throw std::invalid_argument("scripted outcome has the wrong width");
    }
    return b;
}

void append_state_fingerprint(std::string &out, const StateVector &state) {
    const auto amps = state.amplitudes();
    Amplitude rotate{1.0, 0.0};
    for (const auto &a : amps) {
        if (std::abs(a) > 1e-6) {
            rotate = std::conj(a) / std::abs(a);
            break;
        }
    }
    out.push_back('#');
    out += std::to_string(state.num_qubits());
    for (const auto &a : amps) {
        const Amplitude r = a * rotate;
        const std::int64_t q[2] = {std::llround(r.real() * 1e9), std::llround(r.imag() * 1e9)};
        char buf[sizeof q];
        std::memcpy(buf, q, sizeof q);
        out.append(buf, sizeof buf);
    }
}

}  // namespace blindtele
