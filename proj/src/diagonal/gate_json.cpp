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

#include "blindtele/gate_json.hpp"

#include <vector>

namespace blindtele {

nlohmann::json gate_to_json(const DiagonalGate &gate) {
    nlohmann::json nums = nlohmann::json::array();
    for (std::uint64_t r : gate.numerators()) {
        nums.push_back(r);
    }
    return {{"m", gate.num_qubits()}, {"level", gate.level()}, {"numerators", std::move(nums)}};
}

namespace {

std::int64_t integer_field(const nlohmann::json &j, const std::string &key, const std::string &path) {
    if (!j.contains(key)) {
        throw SchemaError(path + "/" + key, "missing");
    }
    const auto &v = j.at(key);
    if (!v.is_number_integer()) {
        throw SchemaError(path + "/" + key, "expected an integer");
    }
    return v.get<std::int64_t>();
}

}  // namespace

DiagonalGate gate_from_json(const nlohmann::json &j, const std::string &path) {
    if (!j.is_object()) {
        throw SchemaError(path.empty() ? "/" : path, "expected a gate object");
    }
    const auto m = integer_field(j, "m", path);
    const auto level = integer_field(j, "level", path);
    if (m < 1 || m > DiagonalGate::kMaxQubits) {
        throw SchemaError(path + "/m", "must lie in [1, " + std::to_string(DiagonalGate::kMaxQubits) + "]");
    }
    if (level < 0 || level > DiagonalGate::kMaxLevel) {
        throw SchemaError(path + "/level", "must lie in [0, " + std::to_string(DiagonalGate::kMaxLevel) + "]");
    }
    if (!j.contains("numerators") || !j.at("numerators").is_array()) {
        throw SchemaError(path + "/numerators", "expected an array");
    }
    const auto &arr = j.at("numerators");
    const std::size_t expected = std::size_t{1} << m;
    if (arr.size() != expected) {
        throw SchemaError(path + "/numerators",
                          "expected " + std::to_string(expected) + " entries, got " + std::to_string(arr.size()));
    }
    std::vector<std::int64_t> table(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        if (!arr[i].is_number_integer()) {
            throw SchemaError(path + "/numerators/" + std::to_string(i), "expected an integer");
        }
        table[i] = arr[i].is_number_unsigned() ? static_cast<std::int64_t>(arr[i].get<std::uint64_t>())
                                               : arr[i].get<std::int64_t>();
    }
    return DiagonalGate::from_numerators(static_cast<int>(m), static_cast<int>(level), table);
}

}  // namespace blindtele
