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

#include "hamweave/qcore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string_view>

#include <Eigen/Eigenvalues>

namespace hamweave {

namespace {

constexpr double kNormTolerance = 1e-10;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  return n;
}

void check_qubit(int n, int qubit) {
  if (qubit < 1 || qubit > n) {
    throw DimensionError("qubit index " + std::to_string(qubit) +
                         " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

int max_dense_qubits() {
  const char* env = std::getenv("HAMWEAVE_MAX_DENSE_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxDenseQubits;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
      value > 30) {
    throw std::invalid_argument("HAMWEAVE_MAX_DENSE_N must be an integer in 1..30");
  }
  return value;
}

void require_dense_size(int n) {
  const int cap = max_dense_qubits();
  if (n > cap) {
    throw DimensionError("dense operation on " + std::to_string(n) +
                         " qubits exceeds the cap of " + std::to_string(cap));
  }
}

double reduce_product(double a, double b, double period) {
  const double hi = a * b;
  if (!std::isfinite(hi)) throw std::invalid_argument("non-finite phase");
  const double lo = std::fma(a, b, -hi);

  const double k = std::floor(hi / period);
  const double q_hi = k * period;
  const double q_lo = std::fma(k, period, -q_hi);
  double r = (hi - q_hi) + (lo - q_lo);

  const double half = 0.5 * period;
  while (r >= half) r -= period;
  while (r < -half) r += period;
  return r;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n) : StateVector(basis(n, 0)) {}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int n, std::size_t index) {
  if (n < 1 || n > 40) throw DimensionError("qubit count must be in 1..40");
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size())) {
    throw DimensionError("amplitude count must be 2^n with n >= 1");
  }
  double sq = 0.0;
  for (const auto& z : amplitudes) sq += std::norm(z);
  if (std::abs(std::sqrt(sq) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
  const int n = log2_exact(amplitudes.size());
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const auto& z : amplitudes_) sq += std::norm(z);
  return std::sqrt(sq);
}

Eigen::VectorXcd StateVector::to_vector() const {
  return Eigen::Map<const Eigen::VectorXcd>(
      amplitudes_.data(), static_cast<Eigen::Index>(amplitudes_.size()));
}

// ---------------------------------------------------------------------------
// DenseUnitary

DenseUnitary::DenseUnitary(Matrix entries, double tolerance) {
  const auto rows = static_cast<std::size_t>(entries.rows());
  if (entries.rows() != entries.cols() || rows < 2 || !is_power_of_two(rows)) {
    throw DimensionError("unitary must be square with dimension 2^n");
  }
  if (!is_unitary(entries, tolerance)) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
  n_ = log2_exact(rows);
  entries_ = std::move(entries);
}

DenseUnitary::DenseUnitary(Matrix entries, int n, Unchecked)
    : n_(n), entries_(std::move(entries)) {}

DenseUnitary DenseUnitary::identity(int n) {
  require_dense_size(n);
  const auto dim = Eigen::Index{1} << n;
  return DenseUnitary(Matrix::Identity(dim, dim), n, Unchecked{});
}

DenseUnitary DenseUnitary::adjoint() const {
  return DenseUnitary(entries_.adjoint(), n_, Unchecked{});
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& rhs) const {
  if (n_ != rhs.n_) throw DimensionError("unitary product dimension mismatch");
  return DenseUnitary(entries_ * rhs.entries_);
}

bool is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <=
         tolerance;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

// ---------------------------------------------------------------------------
// Gate constants

namespace gates {

Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix2 hadamard() { return (pauli_x() + pauli_z()) * (1.0 / std::numbers::sqrt2); }

Matrix2 t_gate() {
  const double angle = std::numbers::pi / 8.0;
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::polar(1.0, -angle);
  m(1, 1) = std::polar(1.0, angle);
  return m;
}

Matrix4 cnot() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

DiagonalPhases zz_phases(double psi) {
  const Complex minus = std::polar(1.0, -psi);
  const Complex plus = std::polar(1.0, psi);
  return {minus, plus, plus, minus};
}

}  // namespace gates

// ---------------------------------------------------------------------------
// Kernels

void apply_single_qubit(StateVector& state, int qubit, const Matrix2& gate) {
  const int n = state.n_;
  check_qubit(n, qubit);
  if (!is_unitary(gate)) throw std::invalid_argument("gate is not unitary");

  const std::size_t mask = qubit_mask(n, qubit);
  const Complex g00 = gate(0, 0), g01 = gate(0, 1);
  const Complex g10 = gate(1, 0), g11 = gate(1, 1);
  auto& amps = state.amplitudes_;
  const std::size_t dim = amps.size();

  // Walk every index with the target bit clear; its partner has it set.
  for (std::size_t base = 0; base < dim; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + mask];
      amps[i] = g00 * a0 + g01 * a1;
      amps[i + mask] = g10 * a0 + g11 * a1;
    }
  }
}

void apply_two_qubit_diagonal(StateVector& state, int q1, int q2,
                              const DiagonalPhases& phases) {
  const int n = state.n_;
  check_qubit(n, q1);
  check_qubit(n, q2);
  if (q1 == q2) throw DimensionError("two-qubit operation on a single qubit");
  for (const auto& p : phases) {
    if (std::abs(std::abs(p) - 1.0) > kPhaseModulusTolerance) {
      throw std::invalid_argument("diagonal phase is not of unit modulus");
    }
  }
  const std::size_t m1 = qubit_mask(n, q1);
  const std::size_t m2 = qubit_mask(n, q2);
  auto& amps = state.amplitudes_;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::size_t sel = ((i & m1) ? 2u : 0u) | ((i & m2) ? 1u : 0u);
    amps[i] *= phases[sel];
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  const int n = state.n_;
  check_qubit(n, control);
  check_qubit(n, target);
  if (control == target) throw DimensionError("CNOT endpoints coincide");
  const std::size_t mc = qubit_mask(n, control);
  const std::size_t mt = qubit_mask(n, target);
  auto& amps = state.amplitudes_;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mc) && !(i & mt)) std::swap(amps[i], amps[i | mt]);
  }
}

// ---------------------------------------------------------------------------
// Metrics

double fidelity_phase_invariant(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionError("fidelity between unitaries of different dimension");
  }
  // tr(U^dagger V) = sum_ij conj(U_ij) V_ij
  const Complex overlap = (u.matrix().conjugate().cwiseProduct(v.matrix())).sum();
  const double f = std::abs(overlap) / static_cast<double>(u.dimension());
  return std::clamp(f, 0.0, 1.0);
}

double spectral_distance_up_to_phase(const DenseUnitary& u,
                                     const DenseUnitary& v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionError("distance between unitaries of different dimension");
  }
  const Matrix w = v.matrix().adjoint() * u.matrix();
  Eigen::ComplexEigenSolver<Matrix> solver(w, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation did not converge");
  }
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    phases.push_back(std::arg(solver.eigenvalues()(i)));
  }
  std::sort(phases.begin(), phases.end());

  const double two_pi = 2.0 * std::numbers::pi;
  double widest_gap = phases.front() + two_pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) {
    widest_gap = std::max(widest_gap, phases[i] - phases[i - 1]);
  }
  const double arc = std::max(0.0, two_pi - widest_gap);
  return 2.0 * std::sin(arc / 4.0);
}

DenseUnitary dense_expm_hermitian(const Matrix& hm, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("non-finite time");
  const auto rows = static_cast<std::size_t>(hm.rows());
  if (hm.rows() != hm.cols() || rows < 2 || !is_power_of_two(rows)) {
    throw DimensionError("Hamiltonian must be square with dimension 2^n");
  }
  require_dense_size(log2_exact(rows));
  if (!is_hermitian(hm)) throw std::invalid_argument("matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(hm);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition did not converge");
  }
  const Matrix& vecs = solver.eigenvectors();
  Eigen::VectorXcd phases(hm.rows());
  for (Eigen::Index i = 0; i < hm.rows(); ++i) {
    phases(i) = std::polar(1.0, -solver.eigenvalues()(i) * t);
  }
  Matrix result = vecs * phases.asDiagonal() * vecs.adjoint();
  return DenseUnitary(std::move(result));
}

}  // namespace hamweave
