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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamweave/search.hpp"

namespace hamweave::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,        ///< bad flag values or invalid arguments
  kParseError = 2,        ///< unreadable or malformed input file
  kDimensionError = 3,    ///< qubit counts or indices disagree
  kAssertionFailure = 4,  ///< a report row violated soundness or monotonicity
  kNotConverged = 5,      ///< search finished above the tolerance
  kIoError = 6,           ///< output could not be written
};

/// One line of the accuracy report.
struct ReportRow {
  std::string gate;    ///< H, T, ZZ or CNOT
  std::string qubits;  ///< "2", or "1:2" for pairs (control:target for CNOT)
  std::uint64_t base = 16;
  int n = 1;
  double duration = 0.0;
  double fidelity = 0.0;
  double bound = 0.0;
  double distance = 0.0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Measured distances may exceed the analytic bound by this much (rounding).
inline constexpr double kSoundnessSlack = 1e-9;
/// Fidelity may drop by this much between bases and still count as nondecreasing.
inline constexpr double kMonotonicitySlack = 1e-12;

inline constexpr const char* kReportHeader =
    "gate,qubits,base,n,duration,fidelity,bound,distance";

std::string format_report_row(const ReportRow& row);
ReportRow parse_report_row(const std::string& line);
/// Reads a CSV produced by cmd_report, header included.
std::vector<ReportRow> parse_report_csv(std::istream& in);

/// Every H, T, ZZ and neighbour CNOT (both orientations) at every base.
std::vector<ReportRow> build_report(int n, std::span<const std::uint64_t> bases);
/// Human-readable descriptions of soundness / monotonicity violations.
std::vector<std::string> check_report(const std::vector<ReportRow>& rows);

int cmd_genspec(int n, std::uint64_t base, const std::string& out_path, std::ostream& out);
int cmd_compile(const std::string& circuit_path, std::uint64_t base,
                const std::string& out_path, std::ostream& out);

struct SimulateOptions {
  std::string spec_path;
  std::string schedule_path;
  /// When set, compare the schedule's unitary with this circuit's ideal unitary.
  std::string circuit_path;
  /// Bitstring with qubit 1 first, or "random" (needs seed). Empty means |0...0>.
  std::string initial;
  std::optional<std::uint64_t> seed;
  std::string csv_path;
};
int cmd_simulate(const SimulateOptions& options, std::ostream& out);

int cmd_report(int n, std::span<const std::uint64_t> bases, const std::string& out_path,
               std::ostream& out);

int cmd_search(const CoincidenceProblem& problem, const std::string& out_path,
               std::ostream& out);

/**
 * Parses a scalar flag value: a decimal number, "e", "sqrt(x)", or a
 * multiple of pi written as "pi", "pi/8", "3*pi/4".
 */
double parse_scalar(const std::string& text);

/// Runs `command`, mapping exceptions to exit codes and printing them to err.
int guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace hamweave::cli
