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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hamweave/compiler.hpp"
#include "oracle.hpp"

using namespace hamweave;

namespace {

constexpr double kPi = std::numbers::pi;
const std::uint64_t kBases[] = {16, 64, 256};

double distance(const DenseUnitary& u, const DenseUnitary& v) {
  return spectral_distance_up_to_phase(u, v);
}

DenseUnitary compiled(const Schedule& s, const CompilerConfig& config) {
  return schedule_unitary(standard_coefficients(config), s);
}

Circuit random_circuit(int n, int gates, std::mt19937_64& rng, bool neighbours_only = false) {
  Circuit c(n);
  for (int i = 0; i < gates; ++i) {
    const int kind = static_cast<int>(rng() % 3);
    const int q = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    if (kind == 0) {
      c.add(Gate::h(q));
    } else if (kind == 1) {
      c.add(Gate::t(q));
    } else {
      int q2 = q;
      if (neighbours_only) {
        q2 = q == n ? q - 1 : (q == 1 ? 2 : q + ((rng() % 2) ? 1 : -1));
      } else {
        while (q2 == q) q2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      }
      c.add(Gate::cnot(q, q2));
    }
  }
  return c;
}

oracle::Mat oracle_circuit(const Circuit& c) {
  const int n = c.num_qubits();
  oracle::Mat u = oracle::eye(Eigen::Index{1} << n);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
        u = oracle::embed(n, g.qubit, oracle::h()) * u;
        break;
      case GateKind::T:
        u = oracle::embed(n, g.qubit, oracle::t()) * u;
        break;
      case GateKind::CNOT:
        u = oracle::cnot_any(n, g.qubit, g.target) * u;
        break;
    }
  }
  return u;
}

}  // namespace

// ---------- configuration and coefficients ----------

TEST(CompilerConfig, AcceptsOnlyPowersOfTwoFromSixteen) {
  EXPECT_NO_THROW(CompilerConfig(3, 16));
  EXPECT_NO_THROW(CompilerConfig(3, 1024));
  EXPECT_THROW(CompilerConfig(3, 8), std::invalid_argument);
  EXPECT_THROW(CompilerConfig(3, 48), std::invalid_argument);
  EXPECT_THROW(CompilerConfig(0, 16), DimensionError);
  EXPECT_THROW(CompilerConfig(200, 1u << 20), std::invalid_argument);
}

TEST(StandardCoefficients, ThreeQubitsBaseSixteen) {
  const HamiltonianSpec spec = standard_coefficients(CompilerConfig(3, 16));
  EXPECT_EQ(std::vector<double>(spec.a().begin(), spec.a().end()),
            (std::vector<double>{1.0, 0.0625, 0.00390625}));
}

TEST(StandardCoefficients, OneAndTwoQubits) {
  const HamiltonianSpec one = standard_coefficients(CompilerConfig(1, 16));
  EXPECT_EQ(std::vector<double>(one.b().begin(), one.b().end()), std::vector<double>{1.0});
  EXPECT_TRUE(one.c().empty());
  const HamiltonianSpec two = standard_coefficients(CompilerConfig(2, 16));
  EXPECT_EQ(std::vector<double>(two.b().begin(), two.b().end()),
            (std::vector<double>{1.0, 1.0 / 256}));
  EXPECT_EQ(std::vector<double>(two.c().begin(), two.c().end()), std::vector<double>{1.0 / 16});
}

// ---------- single-gate schedules ----------

TEST(ScheduleHadamard, WorkedTimes) {
  const CompilerConfig config(3, 16);
  const double expected[] = {kPi / 2, 8 * kPi, 128 * kPi};
  for (int m = 1; m <= 3; ++m) {
    const Schedule s = schedule_hadamard(m, config);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.segments()[0].hamiltonian, Generator::H1);
    EXPECT_EQ(s.segments()[0].duration, expected[m - 1]);
  }
  EXPECT_THROW(schedule_hadamard(0, config), DimensionError);
  EXPECT_THROW(schedule_hadamard(4, config), DimensionError);
}

TEST(ScheduleTGate, Durations) {
  const CompilerConfig config(2, 16);
  EXPECT_EQ(schedule_t_gate(1, config).segments()[0].duration, kPi / 8);
  EXPECT_EQ(schedule_t_gate(2, config).segments()[0].duration, 32 * kPi);
  EXPECT_EQ(schedule_t_gate(2, config).segments()[0].hamiltonian, Generator::H2);
  EXPECT_GT(schedule_t_gate(1, config).segments()[0].duration, 0.0);
}

TEST(ScheduleZz, DurationAndRange) {
  const CompilerConfig config(2, 16);
  const Schedule s = schedule_zz(1, config);
  EXPECT_EQ(s.segments()[0].duration, 12 * kPi);
  EXPECT_EQ(s.segments()[0].duration / 16, 3 * kPi / 4);
  EXPECT_THROW(schedule_zz(2, config), DimensionError);
  EXPECT_THROW(schedule_zz(0, config), DimensionError);
}

TEST(ScheduleZz, RealizesPositiveQuarterPiZz) {
  // Exact terms only: b_1 t = 12 pi, c_1 t = 3 pi/4; drop the weak b_2.
  const CompilerConfig config(2, 16);
  const double t = schedule_zz(1, config).segments()[0].duration;
  const oracle::Mat zz = oracle::kron(oracle::z(), oracle::z());
  const oracle::Mat strong = oracle::embed(2, 1, oracle::z()) + zz / 16.0;
  const oracle::Mat got = oracle::expm(strong, t);
  const oracle::Mat ideal = oracle::expm(zz, -kPi / 4);
  EXPECT_LT(oracle::phase_aligned_max_diff(got, ideal), 1e-12);
  EXPECT_LT((ideal_zz_unitary(2, 1).matrix() - ideal).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(StrongerTerms, AccumulateExactMultiplesOfPi) {
  for (std::uint64_t base : kBases) {
    for (int n = 1; n <= 4; ++n) {
      const CompilerConfig config(n, base);
      const HamiltonianSpec spec = standard_coefficients(config);
      for (int m = 1; m <= n; ++m) {
        const double th = schedule_hadamard(m, config).segments()[0].duration;
        for (int j = 1; j < m; ++j) EXPECT_EQ(std::fmod(spec.a()[j - 1] * th, kPi), 0.0);
        EXPECT_EQ(spec.a()[m - 1] * th, kPi / 2);

        const double tt = schedule_t_gate(m, config).segments()[0].duration;
        for (int j = 1; j < m; ++j) {
          EXPECT_EQ(std::fmod(spec.b()[j - 1] * tt, kPi), 0.0);
          EXPECT_EQ(std::fmod(spec.c()[j - 1] * tt, kPi), 0.0);
        }
        EXPECT_EQ(spec.b()[m - 1] * tt, kPi / 8);
      }
      for (int m = 1; m < n; ++m) {
        const double tz = schedule_zz(m, config).segments()[0].duration;
        for (int j = 1; j <= m; ++j) EXPECT_EQ(std::fmod(spec.b()[j - 1] * tz, kPi), 0.0);
        for (int j = 1; j < m; ++j) EXPECT_EQ(std::fmod(spec.c()[j - 1] * tz, kPi), 0.0);
        EXPECT_EQ(spec.c()[m - 1] * tz, 3 * kPi / 4);
      }
    }
  }
}

// ---------- CNOT ----------

TEST(ScheduleCnot, CompositionAndSegmentCounts) {
  const CompilerConfig config(2, 16);
  const Schedule s = schedule_cnot(1, 2, config);
  ASSERT_EQ(s.size(), 7u);
  const Generator order[] = {Generator::H1, Generator::H2, Generator::H2, Generator::H2,
                             Generator::H2, Generator::H2, Generator::H1};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(s.segments()[i].hamiltonian, order[i]);
  EXPECT_EQ(normalize(s).size(), 3u);
  EXPECT_THROW(schedule_cnot(1, 3, CompilerConfig(3, 16)), DimensionError);
}

TEST(ScheduleCnot, FidelityMatchesResidualClosedForm) {
  // Residuals after H(2) [T(1)]^2 [T(2)]^2 ZZ(1) H(2) at n=2: Z1Z2 keeps
  // 2 (pi/8)/B from the T(1) pair; Z2 keeps 2 (pi/8)/B^2 from T(1) and
  // (3pi/4)/B from ZZ. The Hadamard sandwich on the target leaves the trace alone.
  for (std::uint64_t base : kBases) {
    const CompilerConfig config(2, base);
    const double b = static_cast<double>(base);
    const double alpha = 2 * (kPi / 8) / b;
    const double beta = 2 * (kPi / 8) / (b * b) + (3 * kPi / 4) / b;
    const DenseUnitary u = compiled(schedule_cnot(1, 2, config), config);
    EXPECT_NEAR(fidelity_phase_invariant(DenseUnitary(oracle::cnot()), u),
                std::cos(alpha) * std::cos(beta), 1e-9);
  }
  const CompilerConfig fine(2, 256);
  for (auto [c, t] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const DenseUnitary u = compiled(schedule_cnot(c, t, fine), fine);
    EXPECT_GE(fidelity_phase_invariant(DenseUnitary(oracle::cnot_any(2, c, t)), u), 0.999);
  }
}

TEST(ScheduleCnot, IdealGateIdentityHoldsInEitherOrientation) {
  const oracle::Mat zz = oracle::expm(oracle::kron(oracle::z(), oracle::z()), -kPi / 4);
  const oracle::Mat t2 = oracle::kron(oracle::t() * oracle::t(), oracle::t() * oracle::t());
  const oracle::Mat ih = oracle::kron(oracle::eye(2), oracle::h());
  const oracle::Mat hi = oracle::kron(oracle::h(), oracle::eye(2));
  EXPECT_LT(oracle::phase_aligned_max_diff(ih * zz * t2 * ih, oracle::cnot_any(2, 1, 2)), 1e-12);
  EXPECT_LT(oracle::phase_aligned_max_diff(hi * zz * t2 * hi, oracle::cnot_any(2, 2, 1)), 1e-12);
}

// ---------- routing ----------

TEST(RouteCircuit, LeavesNeighbourCircuitsAlone) {
  const Circuit c(3, {Gate::h(1), Gate::cnot(2, 3), Gate::cnot(2, 1), Gate::t(3)});
  EXPECT_EQ(route_circuit(c), c);
  EXPECT_EQ(route_circuit(Circuit(2)), Circuit(2));
}

TEST(RouteCircuit, DistantCnotBecomesSevenNeighbourCnots) {
  const Circuit c(3, {Gate::cnot(1, 3)});
  const Circuit r = route_circuit(c);
  EXPECT_EQ(r.size(), 7u);
  for (const auto& g : r.gates()) {
    EXPECT_EQ(g.kind, GateKind::CNOT);
    EXPECT_EQ(std::abs(g.qubit - g.target), 1);
  }
  EXPECT_LT(oracle::phase_aligned_max_diff(circuit_unitary(r).matrix(), oracle::cnot_any(3, 1, 3)),
            1e-12);
}

TEST(RouteCircuit, PreservesUnitaryOnRandomCircuits) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const Circuit c = random_circuit(n, 6, rng);
    const Circuit r = route_circuit(c);
    for (const auto& g : r.gates()) {
      if (g.kind == GateKind::CNOT) {
        EXPECT_EQ(std::abs(g.qubit - g.target), 1);
      }
    }
    EXPECT_LT(oracle::phase_aligned_max_diff(circuit_unitary(r).matrix(), oracle_circuit(c)),
              1e-12);
  }
}

TEST(CircuitUnitary, MatchesKronOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_circuit(3, 8, rng);
    EXPECT_LT((circuit_unitary(c).matrix() - oracle_circuit(c)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Circuit, ValidatesIndices) {
  EXPECT_THROW(Circuit(2, {Gate::h(3)}), DimensionError);
  EXPECT_THROW(Circuit(2, {Gate::cnot(1, 1)}), DimensionError);
  EXPECT_THROW(Circuit(2, {Gate::cnot(1, 0)}), DimensionError);
}

// ---------- compile_circuit ----------

TEST(CompileCircuit, EmptyAndSingleHadamard) {
  EXPECT_TRUE(compile_circuit(Circuit(2), CompilerConfig(2, 16)).empty());
  const Schedule s = compile_circuit(Circuit(1, {Gate::h(1)}), CompilerConfig(1, 16));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.segments()[0], (Segment{Generator::H1, kPi / 2, "H(1)"}));
}

TEST(CompileCircuit, CnotMergesToThreeLabelledSegments) {
  const Schedule s = compile_circuit(Circuit(2, {Gate::cnot(1, 2)}), CompilerConfig(2, 16));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.segments()[0].duration, 8 * kPi);
  EXPECT_EQ(s.segments()[1].duration, kPi / 4 + 64 * kPi + 12 * kPi);
  EXPECT_EQ(s.segments()[2].duration, 8 * kPi);
  for (const auto& seg : s.segments()) EXPECT_EQ(seg.label, "CNOT(1,2)");
}

TEST(CompileCircuit, RejectsQubitCountMismatch) {
  EXPECT_THROW(compile_circuit(Circuit(3), CompilerConfig(2, 16)), DimensionError);
  EXPECT_THROW(error_bound(Circuit(3), CompilerConfig(2, 16)), DimensionError);
}

TEST(CompileCircuit, RandomCircuitsMeetInfidelityBound) {
  std::mt19937_64 rng(43);
  for (std::uint64_t base : kBases) {
    const CompilerConfig config(3, base);
    for (int trial = 0; trial < 10; ++trial) {
      const Circuit c = random_circuit(3, 3 + trial % 3, rng);
      const DenseUnitary u = compiled(compile_circuit(c, config), config);
      const double f = fidelity_phase_invariant(DenseUnitary(oracle_circuit(c)), u);
      EXPECT_GE(f, 1.0 - error_bound(c, config).infidelity_bound() - 1e-12);
    }
  }
}

TEST(CompileCircuit, SingleNeighbourGatesAtBase256) {
  const CompilerConfig config(3, 256);
  const Circuit gates[] = {Circuit(3, {Gate::h(1)}), Circuit(3, {Gate::t(2)}),
                           Circuit(3, {Gate::cnot(1, 2)}), Circuit(3, {Gate::cnot(3, 2)})};
  for (const auto& c : gates) {
    const DenseUnitary u = compiled(compile_circuit(c, config), config);
    EXPECT_GE(fidelity_phase_invariant(DenseUnitary(oracle_circuit(c)), u), 0.999);
  }
}

// ---------- closed-form fidelities ----------

TEST(ClosedForm, HadamardFidelityIsProductOfCosines) {
  for (std::uint64_t base : kBases) {
    for (int n = 1; n <= 4; ++n) {
      const CompilerConfig config(n, base);
      for (int m = 1; m <= n; ++m) {
        double expected = 1.0;
        for (int j = m + 1; j <= n; ++j) {
          expected *= std::cos(std::pow(static_cast<double>(base), -(j - m)) * kPi / 2);
        }
        const double f = fidelity_phase_invariant(
            DenseUnitary(oracle::embed(n, m, oracle::h())),
            compiled(schedule_hadamard(m, config), config));
        EXPECT_NEAR(f, expected, 1e-9) << "n=" << n << " m=" << m << " B=" << base;
      }
    }
  }
}

TEST(ClosedForm, MiddleHadamardThreeQubitsBaseSixteen) {
  const CompilerConfig config(3, 16);
  const double f = fidelity_phase_invariant(DenseUnitary(oracle::embed(3, 2, oracle::h())),
                                            compiled(schedule_hadamard(2, config), config));
  EXPECT_NEAR(f, 0.9951847266721969, 1e-9);
}

TEST(ClosedForm, TAndZzFidelitiesAreProductsOfCosines) {
  // Weaker H2 terms have strengths B^-s; the selected T on qubit m sits at
  // s = 2m-2 with angle pi/8, ZZ on (m, m+1) at s = 2m-1 with angle 3pi/4.
  for (std::uint64_t base : kBases) {
    for (int n = 2; n <= 4; ++n) {
      const CompilerConfig config(n, base);
      auto product = [&](int selected, double angle) {
        double p = 1.0;
        for (int s = selected + 1; s <= 2 * n - 2; ++s) {
          p *= std::cos(std::pow(static_cast<double>(base), -(s - selected)) * angle);
        }
        return p;
      };
      for (int m = 1; m <= n; ++m) {
        const double f = fidelity_phase_invariant(
            DenseUnitary(oracle::embed(n, m, oracle::t())),
            compiled(schedule_t_gate(m, config), config));
        EXPECT_NEAR(f, product(2 * m - 2, kPi / 8), 1e-9);
      }
      for (int m = 1; m < n; ++m) {
        const oracle::Mat ideal =
            oracle::embed_pair(n, m, oracle::expm(oracle::kron(oracle::z(), oracle::z()), -kPi / 4));
        const double f = fidelity_phase_invariant(DenseUnitary(ideal),
                                                  compiled(schedule_zz(m, config), config));
        EXPECT_NEAR(f, product(2 * m - 1, 3 * kPi / 4), 1e-9);
      }
    }
  }
}

// ---------- error bounds ----------

TEST(ErrorBound, WorkedValues) {
  EXPECT_EQ(hadamard_bound(2, CompilerConfig(2, 16)), 0.0);
  EXPECT_EQ(t_gate_bound(3, CompilerConfig(3, 16)), 0.0);
  EXPECT_DOUBLE_EQ(hadamard_bound(1, CompilerConfig(2, 16)), kPi / 32);
  EXPECT_NEAR(hadamard_bound(1, CompilerConfig(2, 16)), 0.0982, 5e-5);
  const ErrorBudget budget = error_bound(Circuit(2, {Gate::h(1), Gate::h(2)}), CompilerConfig(2, 16));
  ASSERT_EQ(budget.per_gate.size(), 2u);
  EXPECT_DOUBLE_EQ(budget.total, kPi / 32);
  EXPECT_DOUBLE_EQ(budget.infidelity_bound(), 0.5 * (kPi / 32) * (kPi / 32));
}

TEST(ErrorBound, GeometricSumCeiling) {
  for (std::uint64_t base : kBases) {
    const CompilerConfig config(6, base);
    EXPECT_LE(hadamard_bound(1, config), (kPi / 2) / (static_cast<double>(base) - 1));
  }
}

TEST(ErrorBound, ShrinksFourfoldWhenBaseQuadruples) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const Circuit c = random_circuit(n, 5, rng);
    for (std::uint64_t base : {16u, 64u}) {
      const ErrorBudget lo = error_bound(c, CompilerConfig(n, base));
      const ErrorBudget hi = error_bound(c, CompilerConfig(n, base * 4));
      for (std::size_t i = 0; i < lo.per_gate.size(); ++i) {
        EXPECT_LE(4.0 * hi.per_gate[i], lo.per_gate[i]);
      }
    }
  }
}

TEST(ErrorBound, SoundForEveryGateUpToFourQubits) {
  for (std::uint64_t base : kBases) {
    for (int n = 1; n <= 4; ++n) {
      const CompilerConfig config(n, base);
      for (int m = 1; m <= n; ++m) {
        EXPECT_LE(distance(DenseUnitary(oracle::embed(n, m, oracle::h())),
                           compiled(schedule_hadamard(m, config), config)),
                  hadamard_bound(m, config) + 1e-9);
        EXPECT_LE(distance(DenseUnitary(oracle::embed(n, m, oracle::t())),
                           compiled(schedule_t_gate(m, config), config)),
                  t_gate_bound(m, config) + 1e-9);
      }
      for (int m = 1; m < n; ++m) {
        EXPECT_LE(distance(ideal_zz_unitary(n, m), compiled(schedule_zz(m, config), config)),
                  zz_bound(m, config) + 1e-9);
        for (auto [c, t] : {std::pair{m, m + 1}, std::pair{m + 1, m}}) {
          EXPECT_LE(distance(DenseUnitary(oracle::cnot_any(n, c, t)),
                             compiled(schedule_cnot(c, t, config), config)),
                    cnot_bound(c, t, config) + 1e-9);
        }
      }
    }
  }
}

TEST(ErrorBound, SoundForRandomCircuits) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_circuit(3, 5, rng);
    for (std::uint64_t base : kBases) {
      const CompilerConfig config(3, base);
      const double d = distance(DenseUnitary(oracle_circuit(c)),
                                compiled(compile_circuit(c, config), config));
      EXPECT_LE(d, error_bound(c, config).total + 1e-9);
    }
  }
}
