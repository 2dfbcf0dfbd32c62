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

#include "hamweave/hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hamweave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_coefficients(const std::vector<double>& values, const char* name) {
  for (double v : values) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument(std::string("coefficient ") + name +
                                  " must be strictly positive and finite");
    }
  }
}

void check_time(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
}

bool is_identity(const DiagonalPhases& phases) {
  for (const auto& p : phases) {
    if (p != Complex(1.0, 0.0)) return false;
  }
  return true;
}

Matrix kron(const Matrix& lhs, const Matrix& rhs) {
  Matrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) =
          lhs(i, j) * rhs;
    }
  }
  return out;
}

// Z eigenvalue of `qubit` in basis state `index`: +1 for bit 0.
double z_sign(int n, int qubit, std::size_t index) {
  return (index & qubit_mask(n, qubit)) ? -1.0 : 1.0;
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(std::vector<double> a, std::vector<double> b,
                                 std::vector<double> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.empty()) throw DimensionError("a Hamiltonian needs at least one qubit");
  if (b_.size() != a_.size() || c_.size() + 1 != a_.size()) {
    throw DimensionError("coefficient arrays must have lengths n, n, n-1");
  }
  check_coefficients(a_, "a");
  check_coefficients(b_, "b");
  check_coefficients(c_, "c");
}

void FactorizedEvolution::apply(StateVector& state) const {
  if (state.num_qubits() != num_qubits()) {
    throw DimensionError("evolution and state have different qubit counts");
  }
  for (int m = 1; m <= num_qubits(); ++m) {
    apply_single_qubit(state, m, single_qubit[static_cast<std::size_t>(m - 1)]);
  }
  for (int m = 1; m < num_qubits(); ++m) {
    const auto& phases = pairs[static_cast<std::size_t>(m - 1)];
    if (!is_identity(phases)) apply_two_qubit_diagonal(state, m, m + 1, phases);
  }
}

DenseUnitary FactorizedEvolution::to_dense() const {
  const int n = num_qubits();
  require_dense_size(n);
  Matrix out = single_qubit.front();
  for (std::size_t m = 1; m < single_qubit.size(); ++m) {
    out = kron(out, single_qubit[m]);
  }
  const std::size_t dim = std::size_t{1} << n;
  for (int m = 1; m < n; ++m) {
    const auto& phases = pairs[static_cast<std::size_t>(m - 1)];
    const std::size_t m1 = qubit_mask(n, m);
    const std::size_t m2 = qubit_mask(n, m + 1);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t sel = ((i & m1) ? 2u : 0u) | ((i & m2) ? 1u : 0u);
      out.row(static_cast<Eigen::Index>(i)) *= phases[sel];
    }
  }
  return DenseUnitary(std::move(out));
}

FactorizedEvolution evolve_h1(const HamiltonianSpec& spec, double t) {
  check_time(t);
  const Matrix2 axis = gates::hadamard();
  FactorizedEvolution ev;
  ev.single_qubit.reserve(static_cast<std::size_t>(spec.num_qubits()));
  for (double a : spec.a()) {
    const double theta = reduce_product(a, t, kTwoPi);
    // exp(-i theta (X+Z)/sqrt2) = cos(theta) I - i sin(theta) (X+Z)/sqrt2
    const Matrix2 factor = std::cos(theta) * Matrix2::Identity() -
                           Complex(0.0, std::sin(theta)) * axis;
    ev.single_qubit.push_back(factor);
  }
  ev.pairs.assign(spec.c().size(), DiagonalPhases{1.0, 1.0, 1.0, 1.0});
  return ev;
}

FactorizedEvolution evolve_h2(const HamiltonianSpec& spec, double t) {
  check_time(t);
  FactorizedEvolution ev;
  ev.single_qubit.reserve(static_cast<std::size_t>(spec.num_qubits()));
  for (double b : spec.b()) {
    const double phi = reduce_product(b, t, kTwoPi);
    Matrix2 factor = Matrix2::Zero();
    factor(0, 0) = std::polar(1.0, -phi);
    factor(1, 1) = std::polar(1.0, phi);
    ev.single_qubit.push_back(factor);
  }
  ev.pairs.reserve(spec.c().size());
  for (double c : spec.c()) {
    ev.pairs.push_back(gates::zz_phases(reduce_product(c, t, kTwoPi)));
  }
  return ev;
}

Matrix dense_h1(const HamiltonianSpec& spec) {
  const int n = spec.num_qubits();
  require_dense_size(n);
  const auto dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  const Matrix2 axis = gates::hadamard();
  for (int m = 1; m <= n; ++m) {
    Matrix term = Matrix::Identity(1, 1);
    for (int j = 1; j <= n; ++j) {
      term = kron(term, j == m ? Matrix(axis) : Matrix(Matrix2::Identity()));
    }
    out += spec.a()[static_cast<std::size_t>(m - 1)] * term;
  }
  return out;
}

Matrix dense_h2(const HamiltonianSpec& spec) {
  const int n = spec.num_qubits();
  require_dense_size(n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    double energy = 0.0;
    for (int m = 1; m <= n; ++m) {
      energy += spec.b()[static_cast<std::size_t>(m - 1)] * z_sign(n, m, i);
    }
    for (int m = 1; m < n; ++m) {
      energy += spec.c()[static_cast<std::size_t>(m - 1)] * z_sign(n, m, i) *
                z_sign(n, m + 1, i);
    }
    const auto k = static_cast<Eigen::Index>(i);
    out(k, k) = energy;
  }
  return out;
}

}  // namespace hamweave
