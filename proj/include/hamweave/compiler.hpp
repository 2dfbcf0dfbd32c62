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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hamweave/hamiltonians.hpp"
#include "hamweave/qcore.hpp"
#include "hamweave/simulator.hpp"

namespace hamweave {

/**
 * Qubit count and strength ratio B of the power-of-two coefficient scheme.
 * B must be 2^k with k >= 4: every term stronger than the one being
 * selected then accumulates an exact multiple of pi.
 */
class CompilerConfig {
 public:
  CompilerConfig(int n, std::uint64_t base);

  int num_qubits() const { return n_; }
  std::uint64_t base() const { return base_; }
  int log2_base() const { return log2_base_; }
  /// B^exponent, exact for any integer exponent in range.
  double base_power(int exponent) const;

 private:
  int n_;
  std::uint64_t base_;
  int log2_base_;
};

enum class GateKind { H, T, CNOT };

struct Gate {
  GateKind kind = GateKind::H;
  int qubit = 1;   ///< target of H/T, control of CNOT
  int target = 0;  ///< CNOT target, unused otherwise

  static Gate h(int q) { return {GateKind::H, q, 0}; }
  static Gate t(int q) { return {GateKind::T, q, 0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }

  std::string label() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list over {H, T, CNOT}; gate order is time order.
class Circuit {
 public:
  explicit Circuit(int n, std::vector<Gate> gates = {});

  void add(Gate gate);

  int num_qubits() const { return n_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Gate& gate) const;

  int n_;
  std::vector<Gate> gates_;
};

struct ErrorBudget {
  /// Upper bound on the phase-minimized spectral distance, one per input gate.
  std::vector<double> per_gate;
  /// Bound for the whole compiled circuit (sum of per_gate).
  double total = 0.0;

  /// 1 - fidelity is at most total^2 / 2, capped at 1.
  double infidelity_bound() const;
};

/// a_m = B^-(m-1), b_m = B^-(2m-2), c_m = B^-(2m-1).
HamiltonianSpec standard_coefficients(const CompilerConfig& config);

/// One H1 segment of length B^(m-1) pi/2.
Schedule schedule_hadamard(int m, const CompilerConfig& config);
/// One H2 segment of length B^(2m-2) pi/8.
Schedule schedule_t_gate(int m, const CompilerConfig& config);
/**
 * One H2 segment of length B^(2m-1) 3pi/4 on the pair (m, m+1). H2 only
 * produces exp(-i psi ZZ) with psi > 0, and psi = 3pi/4 equals
 * exp(+i pi/4 ZZ) up to a sign.
 */
Schedule schedule_zz(int m, const CompilerConfig& config);
/**
 * CNOT between neighbouring qubits in either orientation:
 * H(target), T(control) T(control), T(target) T(target), ZZ, H(target).
 */
Schedule schedule_cnot(int control, int target, const CompilerConfig& config);

/**
 * Rewrites CNOTs between distant qubits as SWAP ladders (three alternating
 * neighbour CNOTs per SWAP) around a neighbour CNOT.
 */
Circuit route_circuit(const Circuit& circuit);

/// Routed, per-gate schedules concatenated and normalized. Labels name
/// the source gate.
Schedule compile_circuit(const Circuit& circuit, const CompilerConfig& config);

double hadamard_bound(int m, const CompilerConfig& config);
double t_gate_bound(int m, const CompilerConfig& config);
double zz_bound(int m, const CompilerConfig& config);
double cnot_bound(int control, int target, const CompilerConfig& config);

ErrorBudget error_bound(const Circuit& circuit, const CompilerConfig& config);

/// Ideal unitary of a circuit (any CNOT pair, no routing needed).
DenseUnitary circuit_unitary(const Circuit& circuit);
/// exp(+i pi/4 Z_m Z_{m+1}) on n qubits.
DenseUnitary ideal_zz_unitary(int n, int m);

}  // namespace hamweave
