// Copyright 2026 The hamweave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "hamweave/compiler.hpp"
#include "hamweave/hamiltonians.hpp"
#include "hamweave/search.hpp"
#include "hamweave/simulator.hpp"

// JSON encodings of the file formats. Doubles are written in shortest
// round-trip form, so write -> read reproduces every value bit for bit.
//
//   spec      {"n": 3, "a": [...], "b": [...], "c": [...]}
//   schedule  {"segments": [{"h": 1, "t": 1.5707963267948966, "label": "H(1)"}]}
//   circuit   {"n": 2, "gates": [{"g": "H", "q": 1}, {"g": "CNOT", "q": 1, "q2": 2}]}
//
// Decoding failures raise ParseError; structurally valid documents with
// inconsistent sizes or indices raise DimensionError.

namespace hamweave::io {

using Json = nlohmann::json;

Json to_json(const HamiltonianSpec& spec);
Json to_json(const Schedule& schedule);
Json to_json(const Circuit& circuit);
Json to_json(const CoincidenceProblem& problem);
Json to_json(const CoincidenceResult& result);

HamiltonianSpec spec_from_json(const Json& j);
Schedule schedule_from_json(const Json& j);
Circuit circuit_from_json(const Json& j);
CoincidenceProblem problem_from_json(const Json& j);
CoincidenceResult result_from_json(const Json& j);

/// Parses text; syntax errors report line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_json_file(const std::string& path, const Json& j);

}  // namespace hamweave::io
