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

#include "hamweave/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <utility>

namespace hamweave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThreeQuarterPi = 3.0 * kPi / 4.0;

void check_qubit(const CompilerConfig& config, int m, int limit, const char* what) {
  if (m < 1 || m > limit) {
    throw DimensionError(std::string(what) + " index " + std::to_string(m) +
                         " out of range 1.." + std::to_string(limit) + " for n=" +
                         std::to_string(config.num_qubits()));
  }
}

Schedule single_segment(Generator h, double duration, std::string label) {
  Schedule s;
  s.append(Segment{h, duration, std::move(label)});
  return s;
}

DenseUnitary unitary_from_columns(int n, const std::function<void(StateVector&)>& op) {
  require_dense_size(n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    StateVector column = StateVector::basis(n, k);
    op(column);
    out.col(static_cast<Eigen::Index>(k)) = column.to_vector();
  }
  return DenseUnitary(std::move(out));
}

void push_swap(std::vector<Gate>& out, int a, int b) {
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::cnot(b, a));
  out.push_back(Gate::cnot(a, b));
}

// Neighbour-only expansion of one gate.
std::vector<Gate> route_gate(const Gate& g) {
  if (g.kind != GateKind::CNOT || std::abs(g.qubit - g.target) == 1) return {g};
  const int control = g.qubit;
  const int step = g.target > control ? -1 : 1;
  std::vector<std::pair<int, int>> swaps;
  int pos = g.target;
  // Walk the target state toward the control one neighbour at a time.
  while (std::abs(pos - control) > 1) {
    swaps.emplace_back(std::min(pos, pos + step), std::max(pos, pos + step));
    pos += step;
  }
  std::vector<Gate> out;
  for (const auto& [a, b] : swaps) push_swap(out, a, b);
  out.push_back(Gate::cnot(control, pos));
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    push_swap(out, it->first, it->second);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CompilerConfig::CompilerConfig(int n, std::uint64_t base) : n_(n), base_(base) {
  if (n < 1) throw DimensionError("compiler needs at least one qubit");
  if (base < 16 || !std::has_single_bit(base)) {
    throw std::invalid_argument("base must be a power of two no smaller than 16");
  }
  log2_base_ = std::countr_zero(base);
  if (static_cast<long>(log2_base_) * (2L * n - 2) > 1000) {
    throw std::invalid_argument("base and qubit count give coefficients below double range");
  }
}

double CompilerConfig::base_power(int exponent) const {
  return std::ldexp(1.0, log2_base_ * exponent);
}

std::string Gate::label() const {
  switch (kind) {
    case GateKind::H:
      return "H(" + std::to_string(qubit) + ")";
    case GateKind::T:
      return "T(" + std::to_string(qubit) + ")";
    case GateKind::CNOT:
      return "CNOT(" + std::to_string(qubit) + "," + std::to_string(target) + ")";
  }
  return "?";
}

Circuit::Circuit(int n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
  if (n < 1) throw DimensionError("circuit needs at least one qubit");
  for (const auto& g : gates_) check(g);
}

void Circuit::add(Gate gate) {
  check(gate);
  gates_.push_back(gate);
}

void Circuit::check(const Gate& g) const {
  auto in_range = [this](int q) { return q >= 1 && q <= n_; };
  if (!in_range(g.qubit)) {
    throw DimensionError("gate " + g.label() + " addresses a qubit outside 1.." +
                         std::to_string(n_));
  }
  if (g.kind == GateKind::CNOT) {
    if (!in_range(g.target)) {
      throw DimensionError("gate " + g.label() + " addresses a qubit outside 1.." +
                           std::to_string(n_));
    }
    if (g.target == g.qubit) throw DimensionError("CNOT endpoints coincide");
  }
}

double ErrorBudget::infidelity_bound() const {
  return std::min(1.0, 0.5 * total * total);
}

// ---------------------------------------------------------------------------

HamiltonianSpec standard_coefficients(const CompilerConfig& config) {
  const int n = config.num_qubits();
  std::vector<double> a, b, c;
  for (int m = 1; m <= n; ++m) {
    a.push_back(config.base_power(-(m - 1)));
    b.push_back(config.base_power(-(2 * m - 2)));
    if (m < n) c.push_back(config.base_power(-(2 * m - 1)));
  }
  return HamiltonianSpec(std::move(a), std::move(b), std::move(c));
}

Schedule schedule_hadamard(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits(), "qubit");
  return single_segment(Generator::H1, config.base_power(m - 1) * (kPi / 2.0),
                        Gate::h(m).label());
}

Schedule schedule_t_gate(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits(), "qubit");
  return single_segment(Generator::H2, config.base_power(2 * m - 2) * (kPi / 8.0),
                        Gate::t(m).label());
}

Schedule schedule_zz(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits() - 1, "pair");
  return single_segment(Generator::H2, config.base_power(2 * m - 1) * kThreeQuarterPi,
                        "ZZ(" + std::to_string(m) + "," + std::to_string(m + 1) + ")");
}

Schedule schedule_cnot(int control, int target, const CompilerConfig& config) {
  check_qubit(config, control, config.num_qubits(), "control");
  check_qubit(config, target, config.num_qubits(), "target");
  if (std::abs(control - target) != 1) {
    throw DimensionError("CNOT(" + std::to_string(control) + "," +
                         std::to_string(target) + ") is not between neighbours");
  }
  Schedule s;
  s.append(schedule_hadamard(target, config));
  s.append(schedule_t_gate(control, config));
  s.append(schedule_t_gate(control, config));
  s.append(schedule_t_gate(target, config));
  s.append(schedule_t_gate(target, config));
  s.append(schedule_zz(std::min(control, target), config));
  s.append(schedule_hadamard(target, config));
  return s;
}

Circuit route_circuit(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const auto& g : circuit.gates()) {
    for (const auto& r : route_gate(g)) out.add(r);
  }
  return out;
}

Schedule compile_circuit(const Circuit& circuit, const CompilerConfig& config) {
  if (circuit.num_qubits() != config.num_qubits()) {
    throw DimensionError("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits but the compiler is configured for " +
                         std::to_string(config.num_qubits()));
  }
  Schedule out;
  for (const auto& source : circuit.gates()) {
    const std::string label = source.label();
    for (const auto& g : route_gate(source)) {
      Schedule piece;
      switch (g.kind) {
        case GateKind::H:
          piece = schedule_hadamard(g.qubit, config);
          break;
        case GateKind::T:
          piece = schedule_t_gate(g.qubit, config);
          break;
        case GateKind::CNOT:
          piece = schedule_cnot(g.qubit, g.target, config);
          break;
      }
      for (const auto& seg : piece.segments()) {
        out.append(Segment{seg.hamiltonian, seg.duration, label});
      }
    }
  }
  return normalize(out);
}

// ---------------------------------------------------------------------------
// Error bounds: sum of residual rotation angles on the weaker terms.

double hadamard_bound(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits(), "qubit");
  double sum = 0.0;
  for (int j = m + 1; j <= config.num_qubits(); ++j) {
    sum += config.base_power(-(j - m)) * (kPi / 2.0);
  }
  return sum;
}

double t_gate_bound(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits(), "qubit");
  // H2 strengths are B^-s for s = 0 .. 2n-2 (b_1, c_1, b_2, ...).
  const int selected = 2 * m - 2;
  double sum = 0.0;
  for (int s = selected + 1; s <= 2 * config.num_qubits() - 2; ++s) {
    sum += config.base_power(-(s - selected)) * (kPi / 8.0);
  }
  return sum;
}

double zz_bound(int m, const CompilerConfig& config) {
  check_qubit(config, m, config.num_qubits() - 1, "pair");
  const int selected = 2 * m - 1;
  double sum = 0.0;
  for (int s = selected + 1; s <= 2 * config.num_qubits() - 2; ++s) {
    sum += config.base_power(-(s - selected)) * kThreeQuarterPi;
  }
  return sum;
}

double cnot_bound(int control, int target, const CompilerConfig& config) {
  if (std::abs(control - target) != 1) {
    throw DimensionError("CNOT bound requested for non-neighbouring qubits");
  }
  return 2.0 * hadamard_bound(target, config) + 2.0 * t_gate_bound(control, config) +
         2.0 * t_gate_bound(target, config) + zz_bound(std::min(control, target), config);
}

ErrorBudget error_bound(const Circuit& circuit, const CompilerConfig& config) {
  if (circuit.num_qubits() != config.num_qubits()) {
    throw DimensionError("circuit and compiler qubit counts differ");
  }
  ErrorBudget budget;
  for (const auto& source : circuit.gates()) {
    double bound = 0.0;
    for (const auto& g : route_gate(source)) {
      switch (g.kind) {
        case GateKind::H:
          bound += hadamard_bound(g.qubit, config);
          break;
        case GateKind::T:
          bound += t_gate_bound(g.qubit, config);
          break;
        case GateKind::CNOT:
          bound += cnot_bound(g.qubit, g.target, config);
          break;
      }
    }
    budget.per_gate.push_back(bound);
    budget.total += bound;
  }
  return budget;
}

DenseUnitary circuit_unitary(const Circuit& circuit) {
  const Matrix2 h = gates::hadamard();
  const Matrix2 t = gates::t_gate();
  return unitary_from_columns(circuit.num_qubits(), [&](StateVector& state) {
    for (const auto& g : circuit.gates()) {
      switch (g.kind) {
        case GateKind::H:
          apply_single_qubit(state, g.qubit, h);
          break;
        case GateKind::T:
          apply_single_qubit(state, g.qubit, t);
          break;
        case GateKind::CNOT:
          apply_cnot(state, g.qubit, g.target);
          break;
      }
    }
  });
}

DenseUnitary ideal_zz_unitary(int n, int m) {
  if (m < 1 || m >= n) throw DimensionError("pair index out of range");
  const DiagonalPhases phases = gates::zz_phases(-kPi / 4.0);
  return unitary_from_columns(n, [&](StateVector& state) {
    apply_two_qubit_diagonal(state, m, m + 1, phases);
  });
}

}  // namespace hamweave
