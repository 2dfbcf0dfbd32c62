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

#include "hamweave/simulator.hpp"

#include <cmath>

namespace hamweave {

namespace {

void check_segment(const Segment& s) {
  if (s.hamiltonian != Generator::H1 && s.hamiltonian != Generator::H2) {
    throw std::invalid_argument("segment Hamiltonian must be H1 or H2");
  }
  if (!std::isfinite(s.duration) || s.duration < 0.0) {
    throw std::invalid_argument("segment duration must be finite and nonnegative");
  }
}

}  // namespace

Schedule::Schedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) check_segment(s);
}

void Schedule::append(Segment segment) {
  check_segment(segment);
  segments_.push_back(std::move(segment));
}

void Schedule::append(const Schedule& other) {
  segments_.insert(segments_.end(), other.segments_.begin(), other.segments_.end());
}

double Schedule::total_duration() const {
  double total = 0.0;
  for (const auto& s : segments_) total += s.duration;
  return total;
}

Schedule normalize(const Schedule& schedule) {
  std::vector<Segment> out;
  for (const auto& s : schedule.segments()) {
    check_segment(s);
    if (s.duration == 0.0) continue;
    if (!out.empty() && out.back().hamiltonian == s.hamiltonian) {
      auto& last = out.back();
      last.duration += s.duration;
      if (!s.label.empty() && s.label != last.label) {
        last.label = last.label.empty() ? s.label : last.label + " + " + s.label;
      }
      continue;
    }
    out.push_back(s);
  }
  return Schedule(std::move(out));
}

void run_schedule(const HamiltonianSpec& spec, const Schedule& schedule,
                  StateVector& state) {
  if (state.num_qubits() != spec.num_qubits()) {
    throw DimensionError("state has " + std::to_string(state.num_qubits()) +
                         " qubits but the Hamiltonians act on " +
                         std::to_string(spec.num_qubits()));
  }
  for (const auto& s : schedule.segments()) {
    if (s.duration == 0.0) continue;
    const FactorizedEvolution ev = s.hamiltonian == Generator::H1
                                       ? evolve_h1(spec, s.duration)
                                       : evolve_h2(spec, s.duration);
    ev.apply(state);
  }
}

DenseUnitary schedule_unitary(const HamiltonianSpec& spec,
                              const Schedule& schedule) {
  const int n = spec.num_qubits();
  require_dense_size(n);

  std::vector<FactorizedEvolution> steps;
  steps.reserve(schedule.size());
  for (const auto& s : schedule.segments()) {
    if (s.duration == 0.0) continue;
    steps.push_back(s.hamiltonian == Generator::H1 ? evolve_h1(spec, s.duration)
                                                   : evolve_h2(spec, s.duration));
  }

  const std::size_t dim = std::size_t{1} << n;
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    StateVector column = StateVector::basis(n, k);
    for (const auto& ev : steps) ev.apply(column);
    out.col(static_cast<Eigen::Index>(k)) = column.to_vector();
  }
  return DenseUnitary(std::move(out), 1e-8);
}

}  // namespace hamweave
