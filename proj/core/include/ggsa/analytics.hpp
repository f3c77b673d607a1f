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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ggsa/qcore.hpp"

namespace ggsa {

/// f_c = <eta|psi><psi|eta> = |sum_x a_x|^2 / N.
double coherence_fraction(const PureState& state);

/// sum_mu p_mu f_c(psi_mu), i.e. <eta|rho|eta> of the ensemble.
double coherence_fraction_mixture(const StateMixture& mix);

struct ClosedFormInputs {
  std::uint64_t N;
  std::uint64_t r;
  std::uint64_t tau;
  double fc;
};

/// Exact average success probability over all marked sets:
///   ((N sin^2 v - r) fc + (r - sin^2 v)) / (N - 1),  v = theta (tau + 1/2).
/// Throws std::invalid_argument for N < 2, r outside [1, N] or fc outside
/// [0, 1].
double closed_form_average(const ClosedFormInputs& in);

/// floor(pi/4 sqrt(N/r)).
std::uint64_t optimal_iterations(std::uint64_t N, std::uint64_t r);

/// (N - r)/(N - 1) fc + (r - 1)/(N - 1): closed_form_average with sin^2 v = 1.
/// It differs from the exact average by (N fc - 1)(1 - sin^2 v)/(N - 1), so it
/// bounds the exact value from above only when fc >= 1/N (from below when
/// fc < 1/N).
double optimal_average(std::uint64_t N, std::uint64_t r, double fc);

/// closed_form_average at the ensemble's coherence fraction.
double closed_form_average_mixture(std::uint64_t N, std::uint64_t r, std::uint64_t tau,
                                   const StateMixture& mix);

/// Same optimum expressed through C = f_c - 1/N: (N - r) C / (N - 1) + r / N.
double optimal_average_from_shifted(std::uint64_t N, std::uint64_t r, double shifted_fc);

/// Dense density matrix for small systems (N <= 64).
class SmallDensityMatrix {
 public:
  static constexpr std::size_t kMaxDimension = 64;

  /// Row-major entries. Throws std::invalid_argument if the matrix is not
  /// Hermitian or trace-one within 1e-10, or has an eigenvalue below -1e-10.
  SmallDensityMatrix(std::size_t dimension, std::vector<Complex> entries);

  static SmallDensityMatrix from_pure(const PureState& state);
  static SmallDensityMatrix from_mixture(const StateMixture& mix);

  std::size_t dimension() const noexcept { return dimension_; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dimension_ + j];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

 private:
  std::size_t dimension_;
  std::vector<Complex> entries_;
};

/// sum_{i != j} |rho_ij|.
double l1_coherence(const SmallDensityMatrix& rho);

/// <eta|rho|eta> = (1/N) sum_ij rho_ij.
double coherence_fraction_density(const SmallDensityMatrix& rho);

/// Two pairs of states whose coherence fractions coincide although one member
/// is entangled (resp. coherent) and the other is not.
struct CounterexampleReport {
  double fc_separable;   // (|00> + |10>)/sqrt 2
  double fc_entangled;   // (|00> + |11>)/sqrt 2
  double fc_incoherent;  // I/2
  double fc_coherent;    // [[1/3, -i/3], [i/3, 2/3]]
  double l1_incoherent;
  double l1_coherent;
  bool entanglement_indistinguishable;
  bool coherence_indistinguishable;
  std::string verdict;
};

CounterexampleReport measure_counterexample_report();

}  // namespace ggsa
