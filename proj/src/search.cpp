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

#include "hamweave/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hamweave/qcore.hpp"

namespace hamweave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRefineIterations = 80;
constexpr double kMaxGridPoints = 4e9;

bool better(double err, double t, double best_err, double best_t) {
  return err < best_err || (err == best_err && t < best_t);
}

double max_residual(std::span<const double> coefficients,
                    std::span<const double> targets, double t) {
  double worst = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const double phase = reduce_product(coefficients[j], t, kPi);
    worst = std::max(worst, std::abs(std::remainder(phase - targets[j], kPi)));
  }
  return worst;
}

struct Candidate {
  double time;
  double error;
};

// Best of the grid point itself and a ternary search over [t - r, t + r].
Candidate refine(const CoincidenceProblem& p, double t, double grid_error) {
  double lo = std::max(0.0, t - p.resolution);
  double hi = t + p.resolution;
  for (int i = 0; i < kRefineIterations; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (max_residual(p.coefficients, p.targets, m1) <=
        max_residual(p.coefficients, p.targets, m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double mid_error = max_residual(p.coefficients, p.targets, mid);
  if (better(mid_error, mid, grid_error, t)) return {mid, mid_error};
  return {t, grid_error};
}

}  // namespace

PhaseError phase_error(std::span<const double> coefficients,
                       std::span<const double> targets, double t) {
  if (coefficients.size() != targets.size()) {
    throw DimensionError("coefficients and targets differ in length");
  }
  PhaseError out;
  out.residuals.reserve(coefficients.size());
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const double phase = reduce_product(coefficients[j], t, kPi);
    const double r = std::abs(std::remainder(phase - targets[j], kPi));
    out.residuals.push_back(r);
    out.max = std::max(out.max, r);
  }
  return out;
}

void CoincidenceProblem::validate() const {
  if (coefficients.empty()) throw std::invalid_argument("no coefficients given");
  if (coefficients.size() != targets.size()) {
    throw DimensionError("coefficients and targets differ in length");
  }
  for (double c : coefficients) {
    if (!std::isfinite(c) || !(c > 0.0)) {
      throw std::invalid_argument("coefficients must be positive and finite");
    }
  }
  for (double t : targets) {
    if (!(t >= 0.0 && t < kPi)) throw std::invalid_argument("targets must lie in [0, pi)");
  }
  if (!(tolerance > 0.0 && tolerance < kPi / 2.0)) {
    throw std::invalid_argument("tolerance must lie in (0, pi/2)");
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("horizon must be positive and finite");
  }
  const double strongest = *std::max_element(coefficients.begin(), coefficients.end());
  if (!(resolution > 0.0 && resolution < kPi / (2.0 * strongest))) {
    throw std::invalid_argument("resolution must lie in (0, pi / (2 max coefficient))");
  }
  if (horizon / resolution > kMaxGridPoints) {
    throw std::invalid_argument("horizon / resolution gives too many grid points");
  }
}

CoincidenceResult scan_coincidence(const CoincidenceProblem& problem) {
  problem.validate();
  const auto points = static_cast<std::uint64_t>(std::floor(problem.horizon / problem.resolution));
  auto grid_time = [&](std::uint64_t k) { return static_cast<double>(k) * problem.resolution; };
  auto grid_error = [&](std::uint64_t k) {
    return max_residual(problem.coefficients, problem.targets, grid_time(k));
  };

  std::uint64_t best_k = 0;
  double best_grid = grid_error(0);
  for (std::uint64_t k = 1; k <= points; ++k) {
    const double e = grid_error(k);
    if (e < best_grid) {
      best_grid = e;
      best_k = k;
    }
  }

  Candidate best = refine(problem, grid_time(best_k), best_grid);
  const double slack =
      *std::max_element(problem.coefficients.begin(), problem.coefficients.end()) *
          problem.resolution +
      1e-12;
  for (std::uint64_t k = 0; k <= points; ++k) {
    if (k == best_k) continue;
    const double e = grid_error(k);
    if (e - slack > best.error) continue;
    const Candidate c = refine(problem, grid_time(k), e);
    if (better(c.error, c.time, best.error, best.time)) best = c;
  }

  CoincidenceResult result;
  PhaseError pe = phase_error(problem.coefficients, problem.targets, best.time);
  result.time = best.time;
  result.error = pe.max;
  result.residuals = std::move(pe.residuals);
  result.within_tolerance = result.error <= problem.tolerance;
  return result;
}

std::vector<ConvergentCandidate> convergent_times(double coefficient_num,
                                                  double coefficient_den, int depth,
                                                  std::span<const double> targets) {
  if (!(coefficient_num > 0.0) || !(coefficient_den > 0.0) ||
      !std::isfinite(coefficient_num) || !std::isfinite(coefficient_den)) {
    throw std::invalid_argument("coefficients must be positive and finite");
  }
  if (depth < 0 || depth > 40) throw std::invalid_argument("depth must lie in 0..40");
  const std::vector<double> zero_targets{0.0, 0.0};
  if (targets.empty()) targets = zero_targets;
  if (targets.size() != 2) throw DimensionError("convergent search takes two targets");

  const double ratio = coefficient_num / coefficient_den;
  const double coefficients[2] = {coefficient_num, coefficient_den};
  constexpr double kMaxExact = 9007199254740992.0;  // 2^53

  std::vector<ConvergentCandidate> out;
  double x = ratio;
  // p_{k-2}, p_{k-1} and q_{k-2}, q_{k-1}
  double p0 = 0.0, p1 = 1.0, q0 = 1.0, q1 = 0.0;
  for (int i = 0; i < depth; ++i) {
    const double a = std::floor(x);
    const double p = a * p1 + p0;
    const double q = a * q1 + q0;
    if (p > kMaxExact || q > kMaxExact) break;

    ConvergentCandidate c;
    c.numerator = static_cast<std::int64_t>(p);
    c.denominator = static_cast<std::int64_t>(q);
    c.time = q * kPi / coefficient_den;
    c.error = phase_error(coefficients, targets, c.time).max;
    out.push_back(c);

    const double frac = x - a;
    if (frac == 0.0 ||
        std::abs(p / q - ratio) <= 4.0 * std::numeric_limits<double>::epsilon() * ratio) {
      break;
    }
    x = 1.0 / frac;
    p0 = p1;
    p1 = p;
    q0 = q1;
    q1 = q;
  }
  return out;
}

}  // namespace hamweave
