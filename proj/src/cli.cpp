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

#include "hamweave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "hamweave/compiler.hpp"
#include "hamweave/io.hpp"
#include "hamweave/simulator.hpp"

namespace hamweave::cli {

namespace {

constexpr int kMaxReportQubits = 6;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("report: \"" + text + "\" is not a number");
  }
  if (used != text.size()) throw ParseError("report: \"" + text + "\" is not a number");
  return v;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error(path + ": cannot open file for writing");
  return f;
}

struct ReportItem {
  std::string gate;
  std::string qubits;
  Schedule schedule;
  DenseUnitary ideal;
  double bound;
};

std::vector<ReportItem> report_items(const CompilerConfig& config) {
  const int n = config.num_qubits();
  std::vector<ReportItem> items;
  for (int m = 1; m <= n; ++m) {
    items.push_back({"H", std::to_string(m), schedule_hadamard(m, config),
                     circuit_unitary(Circuit(n, {Gate::h(m)})), hadamard_bound(m, config)});
  }
  for (int m = 1; m <= n; ++m) {
    items.push_back({"T", std::to_string(m), schedule_t_gate(m, config),
                     circuit_unitary(Circuit(n, {Gate::t(m)})), t_gate_bound(m, config)});
  }
  for (int m = 1; m < n; ++m) {
    items.push_back({"ZZ", std::to_string(m) + ":" + std::to_string(m + 1),
                     schedule_zz(m, config), ideal_zz_unitary(n, m), zz_bound(m, config)});
  }
  for (int m = 1; m < n; ++m) {
    for (auto [c, t] : {std::pair{m, m + 1}, std::pair{m + 1, m}}) {
      items.push_back({"CNOT", std::to_string(c) + ":" + std::to_string(t),
                       schedule_cnot(c, t, config),
                       circuit_unitary(Circuit(n, {Gate::cnot(c, t)})),
                       cnot_bound(c, t, config)});
    }
  }
  return items;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report rows

std::string format_report_row(const ReportRow& r) {
  return r.gate + "," + r.qubits + "," + std::to_string(r.base) + "," + std::to_string(r.n) +
         "," + fmt(r.duration) + "," + fmt(r.fidelity) + "," + fmt(r.bound) + "," +
         fmt(r.distance);
}

ReportRow parse_report_row(const std::string& line) {
  const auto fields = split(line, ',');
  if (fields.size() != 8) {
    throw ParseError("report: expected 8 fields, got " + std::to_string(fields.size()));
  }
  ReportRow r;
  r.gate = fields[0];
  r.qubits = fields[1];
  try {
    r.base = std::stoull(fields[2]);
    r.n = std::stoi(fields[3]);
  } catch (const std::exception&) {
    throw ParseError("report: malformed base or n in \"" + line + "\"");
  }
  r.duration = parse_double(fields[4]);
  r.fidelity = parse_double(fields[5]);
  r.bound = parse_double(fields[6]);
  r.distance = parse_double(fields[7]);
  return r;
}

std::vector<ReportRow> parse_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw ParseError("report: missing or unexpected header");
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(parse_report_row(line));
  }
  return rows;
}

std::vector<ReportRow> build_report(int n, std::span<const std::uint64_t> bases) {
  if (n < 1 || n > kMaxReportQubits) {
    throw DimensionError("report supports 1.." + std::to_string(kMaxReportQubits) + " qubits");
  }
  if (bases.empty()) throw std::invalid_argument("report needs at least one base");

  // rows[item][base]
  std::vector<std::vector<ReportRow>> grouped;
  for (std::uint64_t base : bases) {
    const CompilerConfig config(n, base);
    const HamiltonianSpec spec = standard_coefficients(config);
    const auto items = report_items(config);
    grouped.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      const DenseUnitary compiled = schedule_unitary(spec, item.schedule);
      grouped[i].push_back(ReportRow{item.gate, item.qubits, base, n,
                                     item.schedule.total_duration(),
                                     fidelity_phase_invariant(compiled, item.ideal),
                                     item.bound,
                                     spectral_distance_up_to_phase(compiled, item.ideal)});
    }
  }
  std::vector<ReportRow> rows;
  for (auto& g : grouped) rows.insert(rows.end(), g.begin(), g.end());
  return rows;
}

std::vector<std::string> check_report(const std::vector<ReportRow>& rows) {
  std::vector<std::string> problems;
  std::map<std::tuple<std::string, std::string, int>, std::vector<const ReportRow*>> groups;
  for (const auto& r : rows) {
    if (!(r.fidelity >= 0.0 && r.fidelity <= 1.0)) {
      problems.push_back(r.gate + " " + r.qubits + " B=" + std::to_string(r.base) +
                         ": fidelity outside [0,1]");
    }
    if (r.distance > r.bound + kSoundnessSlack) {
      problems.push_back(r.gate + " " + r.qubits + " B=" + std::to_string(r.base) +
                         ": distance " + fmt(r.distance) + " exceeds bound " + fmt(r.bound));
    }
    groups[{r.gate, r.qubits, r.n}].push_back(&r);
  }
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(),
              [](const ReportRow* a, const ReportRow* b) { return a->base < b->base; });
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (group[i]->fidelity < group[i - 1]->fidelity - kMonotonicitySlack) {
        problems.push_back(group[i]->gate + " " + group[i]->qubits + ": fidelity drops from B=" +
                           std::to_string(group[i - 1]->base) + " to B=" +
                           std::to_string(group[i]->base));
      }
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_genspec(int n, std::uint64_t base, const std::string& out_path, std::ostream& out) {
  const HamiltonianSpec spec = standard_coefficients(CompilerConfig(n, base));
  const io::Json j = io::to_json(spec);
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_json_file(out_path, j);
    out << "wrote " << out_path << " (n=" << n << ", B=" << base << ")\n";
  }
  return kSuccess;
}

int cmd_compile(const std::string& circuit_path, std::uint64_t base,
                const std::string& out_path, std::ostream& out) {
  const Circuit circuit = io::circuit_from_json(io::read_json_file(circuit_path));
  const CompilerConfig config(circuit.num_qubits(), base);
  const Schedule schedule = compile_circuit(circuit, config);
  const io::Json j = io::to_json(schedule);
  if (!out_path.empty()) io::write_json_file(out_path, j);
  out << "segments,total_duration\n"
      << schedule.size() << "," << fmt(schedule.total_duration()) << '\n';
  if (out_path.empty()) out << j.dump(2) << '\n';
  return kSuccess;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out) {
  const HamiltonianSpec spec = io::spec_from_json(io::read_json_file(options.spec_path));
  const Schedule schedule = io::schedule_from_json(io::read_json_file(options.schedule_path));
  const int n = spec.num_qubits();

  std::ostringstream table;
  if (!options.circuit_path.empty()) {
    const Circuit circuit = io::circuit_from_json(io::read_json_file(options.circuit_path));
    if (circuit.num_qubits() != n) {
      throw DimensionError("circuit has " + std::to_string(circuit.num_qubits()) +
                           " qubits but the spec has " + std::to_string(n));
    }
    require_dense_size(n);
    const DenseUnitary compiled = schedule_unitary(spec, schedule);
    const DenseUnitary ideal = circuit_unitary(circuit);
    table << "fidelity,distance\n"
          << fmt(fidelity_phase_invariant(compiled, ideal)) << ","
          << fmt(spectral_distance_up_to_phase(compiled, ideal)) << '\n';
  } else {
    StateVector state(n);
    if (options.initial == "random") {
      if (!options.seed) throw std::invalid_argument("--initial random requires --seed");
      std::mt19937_64 rng(*options.seed);
      std::normal_distribution<double> gauss;
      std::vector<Complex> amps(std::size_t{1} << n);
      double sq = 0.0;
      for (auto& z : amps) {
        z = Complex(gauss(rng), gauss(rng));
        sq += std::norm(z);
      }
      for (auto& z : amps) z /= std::sqrt(sq);
      state = StateVector::from_amplitudes(std::move(amps));
    } else if (!options.initial.empty()) {
      if (static_cast<int>(options.initial.size()) != n) {
        throw DimensionError("initial bitstring has " + std::to_string(options.initial.size()) +
                             " bits but the spec has " + std::to_string(n) + " qubits");
      }
      if (options.initial.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("initial state must be a bitstring or \"random\"");
      }
      state = StateVector::basis(n, std::stoull(options.initial, nullptr, 2));
    }
    run_schedule(spec, schedule, state);
    table << "index,basis,real,imag,probability\n";
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      std::string bits(static_cast<std::size_t>(n), '0');
      for (int q = 1; q <= n; ++q) {
        if (i & qubit_mask(n, q)) bits[static_cast<std::size_t>(q - 1)] = '1';
      }
      table << i << "," << bits << "," << fmt(state[i].real()) << "," << fmt(state[i].imag())
            << "," << fmt(std::norm(state[i])) << '\n';
    }
  }
  out << table.str();
  if (!options.csv_path.empty()) {
    auto f = open_output(options.csv_path);
    f << table.str();
  }
  return kSuccess;
}

int cmd_report(int n, std::span<const std::uint64_t> bases, const std::string& out_path,
               std::ostream& out) {
  const auto rows = build_report(n, bases);
  std::ostringstream csv;
  csv << kReportHeader << '\n';
  for (const auto& r : rows) csv << format_report_row(r) << '\n';
  out << csv.str();
  if (!out_path.empty()) {
    auto f = open_output(out_path);
    f << csv.str();
  }
  const auto problems = check_report(rows);
  for (const auto& p : problems) std::cerr << "assertion failed: " << p << '\n';
  return problems.empty() ? kSuccess : kAssertionFailure;
}

int cmd_search(const CoincidenceProblem& problem, const std::string& out_path,
               std::ostream& out) {
  const CoincidenceResult result = scan_coincidence(problem);
  io::Json j = io::to_json(result);
  j["problem"] = io::to_json(problem);
  out << j.dump(2) << '\n';
  if (!out_path.empty()) io::write_json_file(out_path, j);
  return result.within_tolerance ? kSuccess : kNotConverged;
}

double parse_scalar(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) {
      throw std::invalid_argument("cannot read \"" + text + "\" as a number");
    }
    return v;
  };
  if (text == "e") return std::numbers::e;
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    return std::sqrt(number(text.substr(5, text.size() - 6)));
  }
  if (const auto at = text.find("pi"); at != std::string::npos) {
    double scale = 1.0;
    if (at > 0) {
      if (text[at - 1] != '*') throw std::invalid_argument("cannot read \"" + text + "\"");
      scale = number(text.substr(0, at - 1));
    }
    double value = scale * std::numbers::pi;
    const std::string rest = text.substr(at + 2);
    if (!rest.empty()) {
      if (rest.front() != '/') throw std::invalid_argument("cannot read \"" + text + "\"");
      value /= number(rest.substr(1));
    }
    return value;
  }
  return number(text);
}

int guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hamweave::cli
