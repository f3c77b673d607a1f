// Copyright 2026 The ggsa Authors.
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

#include "ggsa/ansatz.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ggsa/analytics.hpp"
#include "ggsa/grover.hpp"
#include "test_support.hpp"

namespace ggsa {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(BuildGate, Examples) {
  const SingleQubitGate h = build_gate({0.0, 0.0, kPi / 4});
  const SingleQubitGate ref = SingleQubitGate::hadamard();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(h(i, j) - ref(i, j)), 0.0, 1e-15);

  const SingleQubitGate z = build_gate({0.0, 0.0, 0.0});
  EXPECT_EQ(z(0, 0), Complex(1.0));
  EXPECT_EQ(z(1, 1), Complex(-1.0));
  EXPECT_EQ(std::abs(z(0, 1)), 0.0);
  EXPECT_EQ(std::abs(z(1, 0)), 0.0);

  EXPECT_THROW(build_gate({0.0, 0.0, -0.1}), std::invalid_argument);
  EXPECT_THROW(build_gate({0.0, 0.0, 1.6}), std::invalid_argument);
}

TEST(BuildGate, UnitaryOverParameterGrid) {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int t = 0; t <= 8; ++t) {
        const SingleQubitGate g = build_gate({a * 0.9 - 3.0, b * 1.3 - 5.0, t * kPi / 16});
        EXPECT_LE(g.unitarity_residual(), 1e-12);
      }
}

TEST(PrepareAnsatzState, Examples) {
  for (int n = 1; n <= 5; ++n) {
    const PureState h = prepare_ansatz_state(n, {0.0, 0.0, kPi / 4});
    EXPECT_LT(testing::max_abs_diff(h.amplitudes(), equal_superposition(n).amplitudes()), 1e-15);
    const PureState zero = prepare_ansatz_state(n, {0.0, 0.0, 0.0});
    EXPECT_LT(testing::max_abs_diff(zero.amplitudes(), basis_state(n).amplitudes()), 1e-15);
    const PureState ones = prepare_ansatz_state(n, {0.0, 0.0, kPi / 2});
    EXPECT_NEAR(std::abs(ones[ones.dimension() - 1]), 1.0, 1e-15);
  }
}

TEST(PrepareAnsatzState, MatchesCircuit) {
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const LocalGateParams p{rng.uniform01() * 7 - 1, rng.uniform01() * 7 - 3,
                            rng.uniform01() * kPi / 2};
    const PureState closed = prepare_ansatz_state(n, p);
    const PureState circuit = apply_product_unitary(basis_state(n), build_gate(p));
    EXPECT_LT(testing::max_abs_diff(closed.amplitudes(), circuit.amplitudes()), 1e-12);
  }
}

TEST(AnsatzCoherenceFraction, Examples) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(ansatz_coherence_fraction(n, {0.0, 0.0, kPi / 4}), 1.0, 1e-14);
    for (double alpha : {-2.0, 0.4, 3.0}) {
      EXPECT_NEAR(ansatz_coherence_fraction(n, {alpha, alpha, kPi / 4}), 1.0, 1e-14);
    }
    EXPECT_NEAR(ansatz_coherence_fraction(n, {0.0, kPi, kPi / 4}), 0.0, 1e-15);
  }
}

TEST(AnsatzCoherenceFraction, DependsOnlyOnPhaseDifference) {
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 4;
    const LocalGateParams p{rng.uniform01() * 6, rng.uniform01() * 6, rng.uniform01() * kPi / 2};
    const double shift = rng.uniform01() * 20 - 10;
    EXPECT_NEAR(ansatz_coherence_fraction(n, p),
                ansatz_coherence_fraction(n, {p.alpha + shift, p.beta + shift, p.theta}), 1e-12);
  }
}

TEST(ExampleA, Examples) {
  for (int n = 1; n <= 5; ++n) {
    for (double a : {0.0, 1.0, -2.5}) {
      EXPECT_NEAR(example_a(n, a, a), 1.0, 1e-14);
      EXPECT_NEAR(example_a(n, a + kPi, a), 0.0, 1e-15);
      EXPECT_NEAR(example_a(n, a + 2 * kPi, a), 1.0, 1e-14);
    }
  }
  EXPECT_NEAR(example_a(2, kPi / 2, 0.0), 0.25, 1e-15);
}

TEST(ExampleA, EqualsAnsatzCoherenceFractionAtQuarterPi) {
  for (int n = 1; n <= 4; ++n)
    for (double a : {0.0, 0.7, 2.0})
      for (double b : {-1.0, 0.3})
        EXPECT_NEAR(example_a(n, a, b), ansatz_coherence_fraction(n, {a, b, kPi / 4}), 1e-14);
}

TEST(ExampleB, Examples) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_NEAR(example_b(n, kPi / 4), 1.0, 1e-14);
    EXPECT_NEAR(example_b(n, 0.0), std::ldexp(1.0, -n), 1e-16);
    EXPECT_NEAR(example_b(n, kPi / 2), std::ldexp(1.0, -n), 1e-15);
  }
  EXPECT_THROW(example_b(2, 2.0), std::invalid_argument);
}

TEST(ExampleB, UniqueMaximumAtQuarterPi) {
  for (int n = 2; n <= 4; ++n) {
    // Coarse grid, then golden-section refinement around the best cell.
    const int cells = 200;
    int best = 0;
    for (int i = 1; i <= cells; ++i) {
      if (example_b(n, i * kPi / 2 / cells) > example_b(n, best * kPi / 2 / cells)) best = i;
    }
    double lo = std::max(0, best - 1) * kPi / 2 / cells;
    double hi = std::min(cells, best + 1) * kPi / 2 / cells;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 80; ++it) {
      const double a = hi - g * (hi - lo);
      const double b = lo + g * (hi - lo);
      if (example_b(n, a) < example_b(n, b)) lo = a; else hi = b;
    }
    EXPECT_NEAR((lo + hi) / 2, kPi / 4, 1e-7);
    // Any point away from pi/4 is strictly lower.
    for (int i = 0; i <= cells; ++i) {
      const double t = i * kPi / 2 / cells;
      if (std::abs(t - kPi / 4) > 1e-3) EXPECT_LT(example_b(n, t), 1.0);
    }
  }
}

TEST(Ansatz, ExhaustiveAverageMatchesClosedFormAtOptimalIterations) {
  for (int n = 2; n <= 5; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const std::uint64_t tau = optimal_iterations(N, 1);
    for (const LocalGateParams& p : {LocalGateParams{0.3, 1.2, 0.5}, LocalGateParams{0, 0, 0.2},
                                     LocalGateParams{2.0, 0.0, kPi / 4}}) {
      const double fc = ansatz_coherence_fraction(n, p);
      const double brute = average_over_all_sets(prepare_ansatz_state(n, p), 1, tau);
      EXPECT_NEAR(brute, closed_form_average({N, 1, tau, fc}), 1e-10);
      // Idealized optimum fc is approached up to 1 - sin^2(vartheta).
      const double v = grover_angle(N, 1) * (tau + 0.5);
      EXPECT_LE(std::abs(brute - fc), 1.0 - std::sin(v) * std::sin(v) + 1e-10);
    }
  }
}

}  // namespace
}  // namespace ggsa
