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
#include <string>
#include <vector>

#include "hamweave/hamiltonians.hpp"
#include "hamweave/qcore.hpp"

namespace hamweave {

/// Which Hamiltonian is switched on during a segment.
enum class Generator { H1 = 1, H2 = 2 };

struct Segment {
  Generator hamiltonian = Generator::H1;
  double duration = 0.0;
  std::string label;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * Bang-bang switching schedule. Segments are listed in physical time order,
 * so the realized operator is U_K ... U_2 U_1 with U_k = exp(-i H_k t_k).
 * Durations are finite and nonnegative.
 */
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<Segment> segments);

  void append(Segment segment);
  void append(const Schedule& other);

  std::span<const Segment> segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  double total_duration() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Segment> segments_;
};

/**
 * Drops zero-length segments and merges neighbours driven by the same
 * Hamiltonian. Labels of merged segments are joined with " + ".
 */
Schedule normalize(const Schedule& schedule);

void run_schedule(const HamiltonianSpec& spec, const Schedule& schedule,
                  StateVector& state);

/// Column k is the schedule applied to basis state k.
DenseUnitary schedule_unitary(const HamiltonianSpec& spec,
                              const Schedule& schedule);

}  // namespace hamweave
