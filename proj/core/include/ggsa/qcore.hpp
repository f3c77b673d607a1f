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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ggsa/marked_set.hpp"

namespace ggsa {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;

/// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
void validate_qubit_count(int n);

/// Normalized n-qubit pure state stored as 2^n dense amplitudes.
///
/// Basis label x reads qubit 0 as its most significant bit. Instances are
/// immutable; every operation returns a new state. Construction never
/// renormalizes: a norm that is off by more than kNormTolerance is an error.
class PureState {
 public:
  /// Throws std::invalid_argument if the length is not 2^n for a supported n,
  /// or if sum |a_x|^2 deviates from 1 by more than kNormTolerance.
  static PureState from_amplitudes(std::vector<Complex> amplitudes);

  /// Same as from_amplitudes, but scales by 1/||v|| first. For test fixtures
  /// and random state generation; rejects the zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);

  int qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t x) const { return amplitudes_[x]; }

 private:
  PureState(int qubits, std::vector<Complex> amplitudes)
      : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

  int qubits_;
  std::vector<Complex> amplitudes_;
};

/// A 2x2 unitary acting on one qubit.
class SingleQubitGate {
 public:
  /// Row-major entries. Throws std::invalid_argument if U U^dagger differs
  /// from the identity by more than kUnitaryTolerance in any entry.
  SingleQubitGate(Complex m00, Complex m01, Complex m10, Complex m11);

  static SingleQubitGate identity();
  static SingleQubitGate hadamard();

  const Complex& operator()(int row, int col) const { return m_[2 * row + col]; }

  /// Largest entrywise |(U U^dagger - I)_ij|.
  double unitarity_residual() const;

 private:
  Complex m_[4];
};

/// Weighted ensemble sum_mu p_mu |psi_mu><psi_mu| of equal-width pure states.
class StateMixture {
 public:
  struct Component {
    double weight;
    PureState state;
  };

  /// Throws std::invalid_argument on an empty ensemble, a weight outside
  /// (0, 1], mismatched qubit counts, or weights not summing to 1.
  explicit StateMixture(std::vector<Component> components);

  std::span<const Component> components() const noexcept { return components_; }
  int qubits() const noexcept { return components_.front().state.qubits(); }
  std::size_t dimension() const noexcept { return components_.front().state.dimension(); }

 private:
  std::vector<Component> components_;
};

PureState basis_state(int n);

/// |eta> = sum_x |x> / sqrt(N).
PureState equal_superposition(int n);

/// Applies gate^{(x) n} with qubit 0 as the most significant bit.
PureState apply_product_unitary(const PureState& state, const SingleQubitGate& gate);

/// |<reference|state>|^2.
double fidelity_with(const PureState& state, const PureState& reference);

/// sum_{m in marked} |a_m|^2.
double success_mass(const PureState& state, const MarkedSet& marked);

/// sum_x |a_x|^2 of a raw amplitude buffer.
double squared_norm(std::span<const Complex> amplitudes);

}  // namespace ggsa
