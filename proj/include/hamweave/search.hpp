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
#include <vector>

namespace hamweave {

/**
 * Max and per-term circular distance, on a circle of circumference pi,
 * between coefficient_j * t and target_j.
 */
struct PhaseError {
  double max = 0.0;
  std::vector<double> residuals;
};

PhaseError phase_error(std::span<const double> coefficients,
                       std::span<const double> targets, double t);

/**
 * Find t in [0, horizon] where every term's phase sits near its target.
 *
 * The grid step must stay below pi / (2 max coefficient) so that no window
 * of width `tolerance` around a coincidence falls between grid points.
 */
struct CoincidenceProblem {
  std::vector<double> coefficients;
  std::vector<double> targets;  ///< each in [0, pi)
  double tolerance = 0.01;      ///< radians, < pi/2
  double horizon = 1000.0;
  double resolution = 1e-3;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct CoincidenceResult {
  double time = 0.0;
  double error = 0.0;
  std::vector<double> residuals;
  /// false when the best time found still misses the tolerance.
  bool within_tolerance = false;
};

/**
 * Grid scan at t = k * resolution followed by a ternary refinement within
 * one grid step of each promising grid point.
 *
 * The returned error is the minimum over all grid points of their refined
 * value, so doubling the horizon can never make it worse. Grid points are
 * pruned with the Lipschitz bound err(t_k) - max_coefficient * resolution.
 * Ties go to the earliest time.
 */
CoincidenceResult scan_coincidence(const CoincidenceProblem& problem);

struct ConvergentCandidate {
  std::int64_t numerator = 0;    ///< p
  std::int64_t denominator = 0;  ///< q
  double time = 0.0;
  double error = 0.0;
};

/**
 * Candidate times from the continued-fraction convergents p/q of
 * coefficient_num / coefficient_den. Each time t = q pi / coefficient_den
 * puts the second term exactly on 0 mod pi and the first within
 * |q rho - p| pi of it. Candidates are scored with phase_error against
 * `targets` (both zero when empty).
 */
std::vector<ConvergentCandidate> convergent_times(double coefficient_num,
                                                  double coefficient_den, int depth,
                                                  std::span<const double> targets = {});

}  // namespace hamweave
