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

#include "ggsa/grover.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ggsa/analytics.hpp"
#include "ggsa/combinations.hpp"
#include "ggsa/error.hpp"
#include "test_support.hpp"

namespace ggsa {
namespace {

using testing::random_state;

PureState minus_state(int n) {
  std::vector<Complex> amps(std::size_t{1} << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(amps.size()));
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = (std::popcount(x) % 2 == 0) ? a : -a;
  return PureState::from_amplitudes(std::move(amps));
}

MarkedSet random_marked(std::uint64_t N, std::uint64_t r, Rng& rng) {
  return MarkedSet(unrank_combination(N, r, rng.uniform_below(binomial(N, r))), N);
}

TEST(Oracle, FlipsMarkedPhases) {
  const PureState out = apply_oracle(equal_superposition(1), MarkedSet({1}, 2));
  EXPECT_NEAR(out[0].real(), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(out[1].real(), -1.0 / std::sqrt(2.0), 1e-16);

  const PureState flipped = apply_oracle(basis_state(3), MarkedSet({0}, 8));
  EXPECT_EQ(flipped[0], Complex(-1.0));
  for (std::size_t x = 1; x < 8; ++x) EXPECT_EQ(flipped[x], Complex(0.0));

  EXPECT_THROW(apply_oracle(basis_state(2), MarkedSet({5}, 8)), std::invalid_argument);
}

TEST(Diffusion, Examples) {
  const PureState eta = equal_superposition(3);
  EXPECT_LT(testing::max_abs_diff(apply_diffusion(eta).amplitudes(), eta.amplitudes()), 1e-15);

  // (1, -1, 0, 0)/sqrt2 is orthogonal to eta.
  const double h = 1.0 / std::sqrt(2.0);
  const PureState orth = PureState::from_amplitudes({h, -h, 0.0, 0.0});
  const PureState neg = apply_diffusion(orth);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(std::abs(neg[x] + orth[x]), 0.0, 1e-16);

  const PureState out = apply_diffusion(PureState::from_amplitudes({-1.0, 0.0, 0.0, 0.0}));
  const std::vector<Complex> expected{0.5, -0.5, -0.5, -0.5};
  EXPECT_LT(testing::max_abs_diff(out.amplitudes(), expected), 1e-16);
}

TEST(Operators, AreInvolutions) {
  Rng rng(2);
  for (int n = 1; n <= 6; ++n) {
    const PureState s = random_state(n, rng);
    const MarkedSet m = random_marked(s.dimension(), 1 + n % 3 % s.dimension(), rng);
    EXPECT_LT(testing::max_abs_diff(apply_oracle(apply_oracle(s, m), m).amplitudes(),
                                    s.amplitudes()),
              1e-12);
    EXPECT_LT(
        testing::max_abs_diff(apply_diffusion(apply_diffusion(s)).amplitudes(), s.amplitudes()),
        1e-12);
    EXPECT_NEAR(squared_norm(apply_diffusion(s).amplitudes()), 1.0, 1e-12);
  }
}

TEST(GroverIterate, ZeroIterationsIsIdentity) {
  Rng rng(4);
  const PureState s = random_state(3, rng);
  const PureState out = grover_iterate(s, MarkedSet({2}, 8), 0);
  EXPECT_EQ(testing::max_abs_diff(out.amplitudes(), s.amplitudes()), 0.0);
}

TEST(GroverIterate, FourItemSearchHitsAfterOneIteration) {
  for (std::uint64_t target = 0; target < 4; ++target) {
    const MarkedSet m({target}, 4);
    EXPECT_NEAR(success_mass(grover_iterate(equal_superposition(2), m, 1), m), 1.0, 1e-15);
    EXPECT_NEAR(success_probability(equal_superposition(2), m, 1), 1.0, 1e-15);
  }
}

TEST(GroverIterate, BasisStartExample) {
  // O|00> = -|00>, then D gives (1/2, -1/2, -1/2, -1/2).
  const MarkedSet m({0}, 4);
  EXPECT_NEAR(success_probability(basis_state(2), m, 1), 0.25, 1e-15);
}

TEST(SuccessProbability, Examples) {
  Rng rng(8);
  const PureState s = random_state(3, rng);
  const MarkedSet m({1, 6}, 8);
  EXPECT_EQ(success_probability(s, m, 0), success_mass(s, m));
  EXPECT_NEAR(success_probability(minus_state(1), MarkedSet({0}, 2), 1), 0.5, 1e-15);
}

TEST(SuccessProbability, MatchesDenseReference) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const PureState s = random_state(n, rng);
    const std::uint64_t N = s.dimension();
    const MarkedSet m = random_marked(N, 1 + rng.uniform_below(N), rng);
    std::uint64_t mask = 0;
    for (std::uint64_t x : m.indices()) mask |= std::uint64_t{1} << x;
    const std::uint64_t tau = rng.uniform_below(7);
    EXPECT_NEAR(success_probability(s, m, tau),
                reference::success_after(testing::to_eigen(s), mask, tau), 1e-12);
  }
}

TEST(SuccessProbability, InvariantUnderGlobalPhase) {
  Rng rng(12);
  const PureState s = random_state(4, rng);
  std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
  for (Complex& a : rotated) a *= std::polar(1.0, 1.234);
  const PureState t = PureState::from_amplitudes(rotated);
  const MarkedSet m({3, 9, 12}, 16);
  for (std::uint64_t tau = 0; tau < 6; ++tau) {
    EXPECT_NEAR(success_probability(s, m, tau), success_probability(t, m, tau), 1e-14);
  }
}

TEST(RunSearch, RecordsTrace) {
  const RunReport report = run_search(equal_superposition(2), MarkedSet({2}, 4), 1);
  ASSERT_EQ(report.per_iteration_success.size(), 2u);
  EXPECT_NEAR(report.per_iteration_success[0], 0.25, 1e-15);
  EXPECT_NEAR(report.final_success, 1.0, 1e-15);
  EXPECT_EQ(report.config.marked_count(), 1u);
  EXPECT_NEAR(report.config.theta(), std::numbers::pi / 3.0, 1e-15);
}

TEST(SearchConfig, ValidatesAndDerivesAngles) {
  EXPECT_THROW(SearchConfig(2, 0, 1), std::invalid_argument);
  EXPECT_THROW(SearchConfig(2, 5, 1), std::invalid_argument);
  const SearchConfig full(2, 4, 3);
  EXPECT_DOUBLE_EQ(full.theta(), std::numbers::pi);
  const SearchConfig c(5, 3, 4);
  EXPECT_NEAR(c.theta(), std::acos(1.0 - 6.0 / 32.0), 1e-12);
  EXPECT_NEAR(c.vartheta(), c.theta() * 4.5, 1e-15);
}

TEST(AverageOverAllSets, Examples) {
  Rng rng(17);
  const PureState s = random_state(3, rng);
  EXPECT_NEAR(average_over_all_sets(s, 8, 0), 1.0, 1e-14);
  EXPECT_NEAR(average_over_all_sets(basis_state(2), 1, 1), 0.25, 1e-15);
  EXPECT_NEAR(average_over_all_sets(random_state(1, rng), 1, 0), 0.5, 1e-15);
}

TEST(AverageOverAllSets, MatchesBitmaskReference) {
  Rng rng(41);
  for (int n = 1; n <= 4; ++n) {
    const PureState s = random_state(n, rng);
    const std::uint64_t N = s.dimension();
    for (unsigned r = 1; r <= std::min<std::uint64_t>(3, N); ++r) {
      for (std::uint64_t tau : {0u, 1u, 4u}) {
        EXPECT_NEAR(average_over_all_sets(s, r, tau),
                    reference::average_success(testing::to_eigen(s), r, tau), 1e-12)
            << n << " " << r << " " << tau;
      }
    }
  }
}

TEST(AverageOverAllSets, TraceMatchesPerTauCalls) {
  Rng rng(43);
  const PureState s = random_state(4, rng);
  const auto trace = average_trace_over_all_sets(s, 2, 6);
  ASSERT_EQ(trace.size(), 7u);
  for (std::uint64_t tau = 0; tau <= 6; ++tau) {
    EXPECT_EQ(trace[tau], average_over_all_sets(s, 2, tau));
  }
}

TEST(AverageOverAllSets, IndependentOfThreadCount) {
  Rng rng(47);
  const PureState s = random_state(6, rng);  // C(64, 3) = 41664 sets, 21 chunks
  const double one = average_over_all_sets(s, 3, 5, {.threads = 1});
  for (unsigned t : {2u, 3u, 8u}) {
    EXPECT_EQ(average_over_all_sets(s, 3, 5, {.threads = t}), one);
  }
}

TEST(AverageOverAllSets, EnforcesEnumerationCap) {
  const PureState eta = equal_superposition(6);
  try {
    average_over_all_sets(eta, 3, 1, {.max_sets = 1000});
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("41664"), std::string::npos) << e.what();
  }
  EXPECT_THROW(average_over_all_sets(eta, 0, 1), std::invalid_argument);
}

TEST(SubspaceDecompose, EqualSuperpositionHasNoRemainders) {
  const PureState eta = equal_superposition(4);
  const MarkedSet m({1, 5, 7}, 16);
  const SubspaceCoords c = subspace_decompose(eta, m);
  EXPECT_FALSE(c.has_psiM);
  EXPECT_FALSE(c.has_psiU);
  EXPECT_EQ(c.c_psiM, Complex(0.0));
  EXPECT_EQ(c.c_psiU, Complex(0.0));
  EXPECT_NEAR(std::abs(c.c_etaM - std::sqrt(3.0 / 16.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.c_etaU - std::sqrt(13.0 / 16.0)), 0.0, 1e-15);
}

TEST(SubspaceDecompose, FullMarkedSetHasNoUnmarkedPart) {
  Rng rng(13);
  const PureState s = random_state(2, rng);
  const SubspaceCoords c = subspace_decompose(s, MarkedSet({0, 1, 2, 3}, 4));
  EXPECT_EQ(c.c_psiU, Complex(0.0));
  EXPECT_EQ(c.c_etaU, Complex(0.0));
  EXPECT_NEAR(marked_mass(c), 1.0, 1e-14);
}

TEST(SubspaceDecompose, ReconstructsRandomStates) {
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 5;
    const PureState s = random_state(n, rng);
    const MarkedSet m = random_marked(s.dimension(), std::min<std::uint64_t>(2, s.dimension()), rng);
    const SubspaceCoords c = subspace_decompose(s, m);
    const SubspaceFrame f = subspace_frame(s, m);
    const auto rebuilt = reconstruct(c, f);
    std::vector<Complex> diff(rebuilt.size());
    for (std::size_t x = 0; x < diff.size(); ++x) diff[x] = rebuilt[x] - s[x];
    EXPECT_LT(std::sqrt(squared_norm(diff)), 1e-10);
    const double total = std::norm(c.c_psiM) + std::norm(c.c_psiU) + std::norm(c.c_etaU) +
                         std::norm(c.c_etaM);
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_NEAR(c.p0, success_mass(s, m), 1e-15);
  }
}

TEST(EvolveSubspace, ZeroIterationsIsIdentity) {
  Rng rng(23);
  const PureState s = random_state(3, rng);
  const MarkedSet m({0, 5}, 8);
  const SubspaceCoords c = subspace_decompose(s, m);
  const SubspaceCoords e = evolve_subspace(c, SearchConfig(3, 2, 0));
  EXPECT_EQ(e.c_psiM, c.c_psiM);
  EXPECT_EQ(e.c_psiU, c.c_psiU);
  EXPECT_EQ(e.c_etaU, c.c_etaU);
  EXPECT_EQ(e.c_etaM, c.c_etaM);
  EXPECT_THROW(evolve_subspace(c, SearchConfig(3, 1, 2)), std::invalid_argument);
}

TEST(EvolveSubspace, MatchesFullSimulation) {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const PureState s = random_state(n, rng);
    const std::uint64_t N = s.dimension();
    const std::uint64_t r = 1 + rng.uniform_below(std::min<std::uint64_t>(N, 4));
    const MarkedSet m = random_marked(N, r, rng);
    const std::uint64_t tau = rng.uniform_below(10);
    const SubspaceCoords evolved = evolve_subspace(subspace_decompose(s, m), SearchConfig(n, r, tau));
    EXPECT_NEAR(marked_mass(evolved), success_probability(s, m, tau), 1e-10);

    const PureState full = grover_iterate(s, m, tau);
    const SubspaceFrame frame = subspace_frame(s, m);
    EXPECT_LT(frame_residual(full.amplitudes(), frame), 1e-10);
    EXPECT_LT(testing::max_abs_diff(reconstruct(evolved, frame), full.amplitudes()), 1e-10);
  }
}

TEST(EvolveSubspace, EqualSuperpositionMarkedAmplitude) {
  // With r = 1 and |eta>, the marked amplitude after tau steps is sin((2 tau + 1) theta / 2).
  for (int n = 2; n <= 6; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const SubspaceCoords c = subspace_decompose(equal_superposition(n), MarkedSet({N / 3}, N));
    for (std::uint64_t tau = 0; tau < 10; ++tau) {
      const SearchConfig cfg(n, 1, tau);
      const SubspaceCoords e = evolve_subspace(c, cfg);
      EXPECT_NEAR(e.c_etaM.real(), std::sin(cfg.vartheta()), 1e-13);
      EXPECT_NEAR(e.c_etaM.imag(), 0.0, 1e-15);
    }
  }
}

// Subset averages of the quantities that enter the closed form, checked
// against exhaustive enumeration.
TEST(SubsetMeans, MatchDerivedIdentities) {
  Rng rng(37);
  for (int n = 2; n <= 4; ++n) {
    const PureState s = random_state(n, rng);
    const double N = static_cast<double>(s.dimension());
    const double fc = coherence_fraction(s);
    for (std::uint64_t r = 1; r <= 3; ++r) {
      const double m = static_cast<double>(r);
      const SubsetMeans means = subset_means(s, r);
      EXPECT_NEAR(means.p0, m / N, 1e-13);
      EXPECT_NEAR(means.abar_M_sq, (m - 1) / (m * (N - 1)) * fc + (N - m) / (N * m * (N - 1)),
                  1e-13);
      EXPECT_NEAR(means.abar_U_sq,
                  (N - m - 1) / ((N - 1) * (N - m)) * fc + m / (N * (N - 1) * (N - m)), 1e-13);
      EXPECT_NEAR(means.cross, fc / (N - 1) - 1 / (N * (N - 1)), 1e-13);

    }
  }
}

}  // namespace
}  // namespace ggsa
