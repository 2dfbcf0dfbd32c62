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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hamweave {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Matrix = Eigen::MatrixXcd;

/// Diagonal of a two-qubit operator, ordered by basis 00, 01, 10, 11.
using DiagonalPhases = std::array<Complex, 4>;

/** Raised when qubit counts, indices or matrix sizes do not agree. */
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Raised when an input file or document cannot be decoded. */
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kPhaseModulusTolerance = 1e-12;
inline constexpr int kDefaultMaxDenseQubits = 10;

/**
 * Cap on the qubit count for any dense 2^n x 2^n construction.
 * Defaults to 10 and may be overridden through HAMWEAVE_MAX_DENSE_N.
 */
int max_dense_qubits();

/// Throws DimensionError when n exceeds max_dense_qubits().
void require_dense_size(int n);

/**
 * Qubits are numbered 1..n and qubit 1 is the most significant bit of a
 * basis index, so |q1 q2 ... qn> has index sum_q bit_q * 2^(n-q).
 */
inline std::size_t qubit_mask(int n, int qubit) {
  return std::size_t{1} << (n - qubit);
}

/**
 * Reduces the exact product a*b modulo `period` and returns the
 * representative in [-period/2, period/2).
 *
 * The product is carried as an unevaluated pair (hi, lo) obtained with an
 * fma, and the multiple of the period is subtracted the same way, so the
 * result stays accurate even when a*b is many orders of magnitude larger
 * than the period. The period is taken as given (std::numbers::pi and its
 * power-of-two multiples), which makes a duration of k * pi/2 (k integer,
 * pi the double nearest to pi) reduce to an exact multiple of pi/2.
 */
double reduce_product(double a, double b, double period);

/** n-qubit pure state with 2^n amplitudes and unit norm. */
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n);

  static StateVector basis(int n, std::size_t index);
  /// Throws unless the length is a power of two and the norm is 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm() const;
  Eigen::VectorXcd to_vector() const;

 private:
  StateVector(int n, std::vector<Complex> amplitudes);

  int n_;
  std::vector<Complex> amplitudes_;

  friend void apply_single_qubit(StateVector&, int, const Matrix2&);
  friend void apply_two_qubit_diagonal(StateVector&, int, int,
                                       const DiagonalPhases&);
  friend void apply_cnot(StateVector&, int, int);
};

/** Square 2^n x 2^n matrix checked to be unitary on construction. */
class DenseUnitary {
 public:
  explicit DenseUnitary(Matrix entries, double tolerance = kUnitarityTolerance);

  static DenseUnitary identity(int n);

  int num_qubits() const { return n_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  DenseUnitary adjoint() const;
  DenseUnitary operator*(const DenseUnitary& rhs) const;

 private:
  struct Unchecked {};
  DenseUnitary(Matrix entries, int n, Unchecked);

  int n_;
  Matrix entries_;
};

bool is_unitary(const Matrix& m, double tolerance = kUnitarityTolerance);
bool is_hermitian(const Matrix& m, double tolerance = kUnitarityTolerance);

namespace gates {

Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_z();
/// (X + Z) / sqrt(2)
Matrix2 hadamard();
/// exp(-i pi/8 Z)
Matrix2 t_gate();
/// Control on the first (more significant) qubit.
Matrix4 cnot();
/// Diagonal of exp(-i psi Z (x) Z).
DiagonalPhases zz_phases(double psi);

}  // namespace gates

/// Applies a 2x2 unitary to one qubit. Rejects indices outside 1..n and
/// non-unitary gates.
void apply_single_qubit(StateVector& state, int qubit, const Matrix2& gate);

/// Multiplies each amplitude by phases[2*bit(q1) + bit(q2)].
void apply_two_qubit_diagonal(StateVector& state, int q1, int q2,
                              const DiagonalPhases& phases);

/// Ideal CNOT between any two distinct qubits.
void apply_cnot(StateVector& state, int control, int target);

/**
 * |tr(U^dagger V)| / 2^n. Equals 1 exactly when U and V agree up to a
 * global phase.
 */
double fidelity_phase_invariant(const DenseUnitary& u, const DenseUnitary& v);

/**
 * min over phi of the spectral norm ||U - e^{i phi} V||.
 *
 * Computed from the eigenphases of V^dagger U: if they fit inside an arc of
 * length L, the optimum is 2 sin(L/4).
 */
double spectral_distance_up_to_phase(const DenseUnitary& u,
                                     const DenseUnitary& v);

/// exp(-i hm t) through the Hermitian eigendecomposition.
DenseUnitary dense_expm_hermitian(const Matrix& hm, double t);

}  // namespace hamweave
