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

#include "hamweave/io.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

namespace hamweave::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return *it;
}

template <typename T>
T get_as(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string(what) + ": field \"" + key + "\" must be an integer");
    }
  }
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string(what) + ": field \"" + key + "\" has the wrong type");
  }
}

std::vector<double> numbers(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_array()) {
    throw ParseError(std::string(what) + ": field \"" + key + "\" must be an array");
  }
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) {
      throw ParseError(std::string(what) + ": field \"" + key + "\" must hold numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

GateKind gate_kind(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "T") return GateKind::T;
  if (name == "CNOT") return GateKind::CNOT;
  throw ParseError("circuit: unknown gate \"" + name + "\"");
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::T:
      return "T";
    case GateKind::CNOT:
      return "CNOT";
  }
  return "?";
}

}  // namespace

Json to_json(const HamiltonianSpec& spec) {
  Json j;
  j["n"] = spec.num_qubits();
  j["a"] = std::vector<double>(spec.a().begin(), spec.a().end());
  j["b"] = std::vector<double>(spec.b().begin(), spec.b().end());
  j["c"] = std::vector<double>(spec.c().begin(), spec.c().end());
  return j;
}

HamiltonianSpec spec_from_json(const Json& j) {
  const int n = get_as<int>(j, "n", "spec");
  auto a = numbers(j, "a", "spec");
  if (static_cast<int>(a.size()) != n) {
    throw DimensionError("spec: \"n\" is " + std::to_string(n) + " but \"a\" has " +
                         std::to_string(a.size()) + " entries");
  }
  return HamiltonianSpec(std::move(a), numbers(j, "b", "spec"), numbers(j, "c", "spec"));
}

Json to_json(const Schedule& schedule) {
  Json segments = Json::array();
  for (const auto& s : schedule.segments()) {
    Json seg;
    seg["h"] = static_cast<int>(s.hamiltonian);
    seg["t"] = s.duration;
    if (!s.label.empty()) seg["label"] = s.label;
    segments.push_back(std::move(seg));
  }
  return Json{{"segments", std::move(segments)}};
}

Schedule schedule_from_json(const Json& j) {
  const Json& segments = field(j, "segments", "schedule");
  if (!segments.is_array()) throw ParseError("schedule: \"segments\" must be an array");
  Schedule out;
  for (const auto& seg : segments) {
    const int h = get_as<int>(seg, "h", "schedule segment");
    if (h != 1 && h != 2) throw ParseError("schedule segment: \"h\" must be 1 or 2");
    const Json& t = field(seg, "t", "schedule segment");
    if (!t.is_number()) throw ParseError("schedule segment: \"t\" must be a number");
    std::string label;
    if (auto it = seg.find("label"); it != seg.end()) {
      if (!it->is_string()) throw ParseError("schedule segment: \"label\" must be a string");
      label = it->get<std::string>();
    }
    try {
      out.append(Segment{static_cast<Generator>(h), t.get<double>(), std::move(label)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("schedule segment: ") + e.what());
    }
  }
  return out;
}

Json to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const auto& g : circuit.gates()) {
    Json entry{{"g", gate_name(g.kind)}, {"q", g.qubit}};
    if (g.kind == GateKind::CNOT) entry["q2"] = g.target;
    gates.push_back(std::move(entry));
  }
  return Json{{"n", circuit.num_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  const int n = get_as<int>(j, "n", "circuit");
  const Json& gates = field(j, "gates", "circuit");
  if (!gates.is_array()) throw ParseError("circuit: \"gates\" must be an array");
  std::vector<Gate> out;
  for (const auto& entry : gates) {
    Gate g;
    g.kind = gate_kind(get_as<std::string>(entry, "g", "circuit gate"));
    g.qubit = get_as<int>(entry, "q", "circuit gate");
    if (g.kind == GateKind::CNOT) g.target = get_as<int>(entry, "q2", "circuit gate");
    out.push_back(g);
  }
  return Circuit(n, std::move(out));
}

Json to_json(const CoincidenceProblem& p) {
  return Json{{"coefficients", p.coefficients}, {"targets", p.targets},
              {"tolerance", p.tolerance},       {"horizon", p.horizon},
              {"resolution", p.resolution}};
}

CoincidenceProblem problem_from_json(const Json& j) {
  CoincidenceProblem p;
  p.coefficients = numbers(j, "coefficients", "problem");
  p.targets = numbers(j, "targets", "problem");
  p.tolerance = get_as<double>(j, "tolerance", "problem");
  p.horizon = get_as<double>(j, "horizon", "problem");
  p.resolution = get_as<double>(j, "resolution", "problem");
  return p;
}

Json to_json(const CoincidenceResult& r) {
  return Json{{"time", r.time},
              {"error", r.error},
              {"residuals", r.residuals},
              {"within_tolerance", r.within_tolerance}};
}

CoincidenceResult result_from_json(const Json& j) {
  CoincidenceResult r;
  r.time = get_as<double>(j, "time", "result");
  r.error = get_as<double>(j, "error", "result");
  r.residuals = numbers(j, "residuals", "result");
  r.within_tolerance = get_as<bool>(j, "within_tolerance", "result");
  return r;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open file for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace hamweave::io
