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

#include "ggsa/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ggsa {

namespace {

int log2_exact(std::size_t length) {
  if (length < 2 || (length & (length - 1)) != 0) {
    throw std::invalid_argument("amplitude count " + std::to_string(length) +
                                " is not 2^n for n >= 1");
  }
  int n = 0;
  while ((std::size_t{1} << n) < length) ++n;
  return n;
}

}  // namespace

void validate_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

double squared_norm(std::span<const Complex> amplitudes) {
  double total = 0.0;
  for (const Complex& a : amplitudes) total += std::norm(a);
  return total;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
  const int n = log2_exact(amplitudes.size());
  validate_qubit_count(n);
  const double norm = squared_norm(amplitudes);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("state is not normalized: sum |a|^2 = " + std::to_string(norm));
  }
  return PureState(n, std::move(amplitudes));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  for (Complex& a : amplitudes) a /= norm;
  return from_amplitudes(std::move(amplitudes));
}

SingleQubitGate::SingleQubitGate(Complex m00, Complex m01, Complex m10, Complex m11)
    : m_{m00, m01, m10, m11} {
  const double residual = unitarity_residual();
  if (!(residual <= kUnitaryTolerance)) {
    throw std::invalid_argument("gate is not unitary: residual " + std::to_string(residual));
  }
}

SingleQubitGate SingleQubitGate::identity() { return {1.0, 0.0, 0.0, 1.0}; }

SingleQubitGate SingleQubitGate::hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h, h, -h};
}

double SingleQubitGate::unitarity_residual() const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex entry = m_[2 * i] * std::conj(m_[2 * j]) + m_[2 * i + 1] * std::conj(m_[2 * j + 1]);
      if (i == j) entry -= 1.0;
      worst = std::max(worst, std::abs(entry));
    }
  }
  return worst;
}

StateMixture::StateMixture(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("mixture needs at least one component");
  }
  double total = 0.0;
  const int n = components_.front().state.qubits();
  for (const Component& c : components_) {
    if (!(c.weight > 0.0 && c.weight <= 1.0)) {
      throw std::invalid_argument("mixture weight outside (0, 1]");
    }
    if (c.state.qubits() != n) {
      throw std::invalid_argument("mixture components have different qubit counts");
    }
    total += c.weight;
  }
  if (!(std::abs(total - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("mixture weights sum to " + std::to_string(total));
  }
}

PureState basis_state(int n) {
  validate_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  amps[0] = 1.0;
  return PureState::from_amplitudes(std::move(amps));
}

PureState equal_superposition(int n) {
  validate_qubit_count(n);
  const std::size_t N = std::size_t{1} << n;
  return PureState::from_amplitudes(
      std::vector<Complex>(N, Complex(1.0 / std::sqrt(static_cast<double>(N)), 0.0)));
}

PureState apply_product_unitary(const PureState& state, const SingleQubitGate& gate) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  const int n = state.qubits();
  const std::size_t N = amps.size();
  for (int q = 0; q < n; ++q) {
    // Qubit q is bit (n - 1 - q) of the basis label.
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t base = 0; base < N; base += 2 * stride) {
      for (std::size_t x = base; x < base + stride; ++x) {
        const Complex a0 = amps[x];
        const Complex a1 = amps[x + stride];
        amps[x] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps[x + stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
      }
    }
  }
  return PureState::from_amplitudes(std::move(amps));
}

double fidelity_with(const PureState& state, const PureState& reference) {
  if (state.dimension() != reference.dimension()) {
    throw std::invalid_argument("fidelity of states with different dimensions");
  }
  Complex overlap = 0.0;
  for (std::size_t x = 0; x < state.dimension(); ++x) {
    overlap += std::conj(reference[x]) * state[x];
  }
  return std::norm(overlap);
}

double success_mass(const PureState& state, const MarkedSet& marked) {
  if (marked.dimension() != state.dimension()) {
    throw std::invalid_argument("marked set built for N = " + std::to_string(marked.dimension()) +
                                ", state has N = " + std::to_string(state.dimension()));
  }
  double mass = 0.0;
  for (std::uint64_t m : marked.indices()) mass += std::norm(state[m]);
  return mass;
}

}  // namespace ggsa
