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
#include <span>
#include <vector>

#include "ggsa/qcore.hpp"
#include "ggsa/rng.hpp"
#include "oracle/reference.hpp"

namespace ggsa::testing {

/// Haar-like random state from complex Gaussian amplitudes.
inline PureState random_state(int n, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (Complex& a : amps) a = Complex(rng.normal(), rng.normal());
  return PureState::normalized(std::move(amps));
}

inline reference::Vec to_eigen(std::span<const Complex> amps) {
  reference::Vec v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return v;
}

inline reference::Vec to_eigen(const PureState& s) { return to_eigen(s.amplitudes()); }

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace ggsa::testing
