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

#include "ggsa/analytics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ggsa/grover.hpp"

namespace ggsa {

namespace {

constexpr double kDensityTolerance = 1e-10;

void require_closed_form_domain(std::uint64_t N, std::uint64_t r, double fc) {
  if (N < 2) throw std::invalid_argument("closed forms need N >= 2");
  if (r < 1 || r > N) throw std::invalid_argument("marked count outside [1, N]");
  if (!(fc >= 0.0 && fc <= 1.0)) throw std::invalid_argument("coherence fraction outside [0, 1]");
}

}  // namespace

double coherence_fraction(const PureState& state) {
  Complex total = 0.0;
  for (const Complex& a : state.amplitudes()) total += a;
  return std::norm(total) / static_cast<double>(state.dimension());
}

double coherence_fraction_mixture(const StateMixture& mix) {
  double fc = 0.0;
  for (const auto& c : mix.components()) fc += c.weight * coherence_fraction(c.state);
  return fc;
}

double closed_form_average(const ClosedFormInputs& in) {
  require_closed_form_domain(in.N, in.r, in.fc);
  const double N = static_cast<double>(in.N);
  const double r = static_cast<double>(in.r);
  const double vartheta = grover_angle(in.N, in.r) * (static_cast<double>(in.tau) + 0.5);
  const double s2 = std::sin(vartheta) * std::sin(vartheta);
  return ((N * s2 - r) * in.fc + (r - s2)) / (N - 1.0);
}

std::uint64_t optimal_iterations(std::uint64_t N, std::uint64_t r) {
  if (r < 1 || r > N) throw std::invalid_argument("marked count outside [1, N]");
  const double ratio = static_cast<double>(N) / static_cast<double>(r);
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

double optimal_average(std::uint64_t N, std::uint64_t r, double fc) {
  require_closed_form_domain(N, r, fc);
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(r);
  return (n - m) / (n - 1.0) * fc + (m - 1.0) / (n - 1.0);
}

double optimal_average_from_shifted(std::uint64_t N, std::uint64_t r, double shifted_fc) {
  require_closed_form_domain(N, r, shifted_fc + 1.0 / static_cast<double>(N));
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(r);
  return (n - m) * shifted_fc / (n - 1.0) + m / n;
}

double closed_form_average_mixture(std::uint64_t N, std::uint64_t r, std::uint64_t tau,
                                   const StateMixture& mix) {
  if (mix.dimension() != N) {
    throw std::invalid_argument("mixture dimension " + std::to_string(mix.dimension()) +
                                " does not match N = " + std::to_string(N));
  }
  return closed_form_average({N, r, tau, coherence_fraction_mixture(mix)});
}

SmallDensityMatrix::SmallDensityMatrix(std::size_t dimension, std::vector<Complex> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension_ < 1 || dimension_ > kMaxDimension) {
    throw std::invalid_argument("density matrix dimension outside [1, 64]");
  }
  if (entries_.size() != dimension_ * dimension_) {
    throw std::invalid_argument("density matrix needs dimension^2 entries");
  }
  Complex trace = 0.0;
  Eigen::MatrixXcd m(dimension_, dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    trace += (*this)(i, i);
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > kDensityTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j);
    }
  }
  if (std::abs(trace - 1.0) > kDensityTolerance) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

SmallDensityMatrix SmallDensityMatrix::from_pure(const PureState& state) {
  const std::size_t N = state.dimension();
  std::vector<Complex> entries(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) entries[i * N + j] = state[i] * std::conj(state[j]);
  }
  return SmallDensityMatrix(N, std::move(entries));
}

SmallDensityMatrix SmallDensityMatrix::from_mixture(const StateMixture& mix) {
  const std::size_t N = mix.dimension();
  std::vector<Complex> entries(N * N);
  for (const auto& c : mix.components()) {
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        entries[i * N + j] += c.weight * c.state[i] * std::conj(c.state[j]);
      }
    }
  }
  return SmallDensityMatrix(N, std::move(entries));
}

double l1_coherence(const SmallDensityMatrix& rho) {
  double total = 0.0;
  for (std::size_t i = 0; i < rho.dimension(); ++i) {
    for (std::size_t j = 0; j < rho.dimension(); ++j) {
      if (i != j) total += std::abs(rho(i, j));
    }
  }
  return total;
}

double coherence_fraction_density(const SmallDensityMatrix& rho) {
  Complex total = 0.0;
  for (const Complex& e : rho.entries()) total += e;
  return total.real() / static_cast<double>(rho.dimension());
}

CounterexampleReport measure_counterexample_report() {
  const double h = 1.0 / std::sqrt(2.0);
  // Two-qubit labels: |00> = 0, |10> = 2, |11> = 3.
  const PureState separable = PureState::from_amplitudes({h, 0.0, h, 0.0});
  const PureState entangled = PureState::from_amplitudes({h, 0.0, 0.0, h});
  const SmallDensityMatrix incoherent(2, {0.5, 0.0, 0.0, 0.5});
  const Complex third_i(0.0, 1.0 / 3.0);
  const SmallDensityMatrix coherent(2, {1.0 / 3.0, -third_i, third_i, 2.0 / 3.0});

  CounterexampleReport report{};
  report.fc_separable = coherence_fraction(separable);
  report.fc_entangled = coherence_fraction(entangled);
  report.fc_incoherent = coherence_fraction_density(incoherent);
  report.fc_coherent = coherence_fraction_density(coherent);
  report.l1_incoherent = l1_coherence(incoherent);
  report.l1_coherent = l1_coherence(coherent);
  report.entanglement_indistinguishable =
      std::abs(report.fc_separable - report.fc_entangled) <= 1e-12;
  report.coherence_indistinguishable =
      std::abs(report.fc_incoherent - report.fc_coherent) <= 1e-12;
  if (report.entanglement_indistinguishable && report.coherence_indistinguishable) {
    report.verdict =
        "f_c is not an entanglement or coherence measure: equal values for a separable and an "
        "entangled state, and for an incoherent and a coherent state";
  } else {
    report.verdict = "counterexample pairs are distinguishable by f_c";
  }
  return report;
}

}  // namespace ggsa
