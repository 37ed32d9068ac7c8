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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "blindtele/diagonal_gate.hpp"

namespace blindtele {

/// Input that parses as JSON but violates a schema. `field` is a
/// JSON-pointer-like path such as "/gates/1/0/numerators".
class SchemaError : public std::runtime_error {
  public:
    SchemaError(std::string field, const std::string &what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

  private:
    std::string field_;
};

/// Gate serialization:
///   {"m": <qubits>, "level": <L>, "numerators": [r_0, r_1, ..., r_{2^m-1}]}
/// Entry j is the angle numerator of the Z-string whose mask is j, with
/// qubit 1 as the most significant bit of j (so for m = 2, index 1 is Z on
/// qubit 2, index 2 is Z on qubit 1 and index 3 is Z Z). r_0 is written as 0
/// and ignored on input; negative or oversized numerators are reduced.
nlohmann::json gate_to_json(const DiagonalGate &gate);
DiagonalGate gate_from_json(const nlohmann::json &j, const std::string &path = "");

}  // namespace blindtele
