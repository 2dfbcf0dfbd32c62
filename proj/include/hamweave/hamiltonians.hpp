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

#include <span>
#include <vector>

#include "hamweave/qcore.hpp"

namespace hamweave {

/**
 * Coefficients of the two switchable Hamiltonians on an n-qubit chain:
 *
 *   H1 = sum_m a_m (X_m + Z_m)/sqrt(2)
 *   H2 = sum_m b_m Z_m + sum_m c_m Z_m Z_{m+1}
 *
 * All coefficients are strictly positive and finite; a and b have n entries,
 * c has n-1. Time is dimensionless (hbar = 1).
 */
class HamiltonianSpec {
 public:
  HamiltonianSpec(std::vector<double> a, std::vector<double> b,
                  std::vector<double> c);

  int num_qubits() const { return static_cast<int>(a_.size()); }
  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }
  std::span<const double> c() const { return c_; }

  friend bool operator==(const HamiltonianSpec&, const HamiltonianSpec&) = default;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

/**
 * exp(-i H t) for one of the two Hamiltonians, kept as commuting factors:
 * one 2x2 unitary per qubit and one diagonal per neighbouring pair (m, m+1).
 * Pair factors are all-identity for H1.
 */
struct FactorizedEvolution {
  std::vector<Matrix2> single_qubit;
  std::vector<DiagonalPhases> pairs;

  int num_qubits() const { return static_cast<int>(single_qubit.size()); }
  void apply(StateVector& state) const;
  /// Kronecker assembly of all factors; subject to the dense cap.
  DenseUnitary to_dense() const;
};

FactorizedEvolution evolve_h1(const HamiltonianSpec& spec, double t);
FactorizedEvolution evolve_h2(const HamiltonianSpec& spec, double t);

Matrix dense_h1(const HamiltonianSpec& spec);
/// Diagonal in the computational basis.
Matrix dense_h2(const HamiltonianSpec& spec);

}  // namespace hamweave
