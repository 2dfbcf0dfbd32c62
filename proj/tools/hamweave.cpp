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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamweave/cli.hpp"

namespace {

std::vector<double> scalars(const std::vector<std::string>& texts) {
  std::vector<double> out;
  for (const auto& t : texts) out.push_back(hamweave::cli::parse_scalar(t));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hamweave::cli;

  CLI::App app{"Compile and simulate bang-bang schedules of two fixed 2-local Hamiltonians"};
  app.require_subcommand(1);

  int n = 1;
  std::uint64_t base = 16;
  std::vector<std::uint64_t> bases;
  std::string out_path, circuit_path;
  cli::SimulateOptions sim;
  std::uint64_t seed = 0;
  std::vector<std::string> coeffs, targets;
  std::string tolerance = "0.02", tmax = "1000", resolution = "1e-3";

  auto* genspec = app.add_subcommand("genspec", "write the power-of-two coefficient spec");
  genspec->add_option("--n", n, "qubit count")->required()->check(CLI::PositiveNumber);
  genspec->add_option("--base", base, "strength ratio B (power of two, >= 16)");
  genspec->add_option("--out", out_path, "output spec JSON (stdout when omitted)");

  auto* compile = app.add_subcommand("compile", "compile a circuit into a switching schedule");
  compile->add_option("--circuit", circuit_path, "circuit JSON")->required();
  compile->add_option("--base", base, "strength ratio B");
  compile->add_option("--out", out_path, "output schedule JSON");

  auto* simulate = app.add_subcommand("simulate", "run a schedule on a state or compare unitaries");
  simulate->add_option("--spec", sim.spec_path, "spec JSON")->required();
  simulate->add_option("--schedule", sim.schedule_path, "schedule JSON")->required();
  simulate->add_option("--circuit", sim.circuit_path,
                       "ideal circuit JSON; switches to fidelity mode");
  simulate->add_option("--initial", sim.initial, "basis bitstring (qubit 1 first) or 'random'");
  auto* seed_opt = simulate->add_option("--seed", seed, "seed for --initial random");
  simulate->add_option("--csv", sim.csv_path, "also write the table to this CSV file");

  auto* report = app.add_subcommand("report", "accuracy table for every gate and base");
  report->add_option("--n", n, "qubit count (<= 6)")->required()->check(CLI::PositiveNumber);
  report->add_option("--base", bases, "bases, e.g. 16,64,256")->delimiter(',')->required();
  report->add_option("--out", out_path, "also write the CSV here");

  auto* search = app.add_subcommand("search", "scan for a phase coincidence");
  search->add_option("--coeffs", coeffs, "coefficients, e.g. 1,sqrt(5),e")
      ->delimiter(',')
      ->required();
  search->add_option("--targets", targets, "target phases mod pi, e.g. pi/2,0,0")
      ->delimiter(',')
      ->required();
  search->add_option("--tolerance", tolerance, "max residual in radians");
  search->add_option("--tmax", tmax, "search horizon");
  search->add_option("--resolution", resolution, "grid step");
  search->add_option("--out", out_path, "also write the result JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageError;
  }

  return cli::guarded(
      [&]() -> int {
        if (*genspec) return cli::cmd_genspec(n, base, out_path, std::cout);
        if (*compile) return cli::cmd_compile(circuit_path, base, out_path, std::cout);
        if (*simulate) {
          if (*seed_opt) sim.seed = seed;
          return cli::cmd_simulate(sim, std::cout);
        }
        if (*report) return cli::cmd_report(n, bases, out_path, std::cout);
        hamweave::CoincidenceProblem problem;
        problem.coefficients = scalars(coeffs);
        problem.targets = scalars(targets);
        problem.tolerance = cli::parse_scalar(tolerance);
        problem.horizon = cli::parse_scalar(tmax);
        problem.resolution = cli::parse_scalar(resolution);
        return cli::cmd_search(problem, out_path, std::cout);
      },
      std::cerr);
}
