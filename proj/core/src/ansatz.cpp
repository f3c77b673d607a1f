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

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ggsa {

namespace {

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("mixing angle theta outside [0, pi/2]");
  }
}

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

SingleQubitGate build_gate(const LocalGateParams& p) {
  require_theta(p.theta);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return SingleQubitGate(phase(p.alpha) * c, phase(-p.beta) * s, phase(p.beta) * s,
                         -phase(-p.alpha) * c);
}

PureState prepare_ansatz_state(int n, const LocalGateParams& p) {
  validate_qubit_count(n);
  require_theta(p.theta);
  const Complex zero_factor = phase(p.alpha) * std::cos(p.theta);
  const Complex one_factor = phase(p.beta) * std::sin(p.theta);

  // Powers by repeated multiplication; indexed by exponent.
  std::vector<Complex> zero_pow(n + 1, 1.0);
  std::vector<Complex> one_pow(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    zero_pow[k] = zero_pow[k - 1] * zero_factor;
    one_pow[k] = one_pow[k - 1] * one_factor;
  }

  const std::size_t N = std::size_t{1} << n;
  std::vector<Complex> amps(N);
  for (std::size_t j = 0; j < N; ++j) {
    const int ones = std::popcount(j);
    amps[j] = zero_pow[n - ones] * one_pow[ones];
  }
  return PureState::from_amplitudes(std::move(amps));
}

double ansatz_coherence_fraction(int n, const LocalGateParams& p) {
  validate_qubit_count(n);
  require_theta(p.theta);
  const Complex single = phase(p.alpha) * std::cos(p.theta) + phase(p.beta) * std::sin(p.theta);
  // |z^n|^2 / 2^n = (|z|^2 / 2)^n.
  return std::pow(std::norm(single) / 2.0, n);
}

double example_a(int n, double alpha, double beta) {
  validate_qubit_count(n);
  return std::pow(std::norm(phase(alpha) + phase(beta)) / 4.0, n);
}

double example_b(int n, double theta) {
  validate_qubit_count(n);
  require_theta(theta);
  const double sum = std::cos(theta) + std::sin(theta);
  return std::pow(sum * sum / 2.0, n);
}

}  // namespace ggsa
