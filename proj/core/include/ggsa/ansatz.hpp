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

#include "ggsa/qcore.hpp"

namespace ggsa {

/// Parameters of the single-qubit gate
///   [[ e^{i alpha} cos theta,  e^{-i beta} sin theta ],
///    [ e^{i beta} sin theta,  -e^{-i alpha} cos theta ]].
/// (0, 0, pi/4) is the Hadamard gate.
struct LocalGateParams {
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;  // in [0, pi/2]
};

SingleQubitGate build_gate(const LocalGateParams& p);

/// (U |0>)^{(x) n} in closed form: amplitude of |j> is
/// (e^{i alpha} cos theta)^{zeros(j)} (e^{i beta} sin theta)^{ones(j)}.
PureState prepare_ansatz_state(int n, const LocalGateParams& p);

/// |(e^{i alpha} cos theta + e^{i beta} sin theta)^n|^2 / 2^n.
double ansatz_coherence_fraction(int n, const LocalGateParams& p);

/// Optimal single-target average at theta = pi/4: |(e^{ia} + e^{ib})^n|^2 / 4^n.
double example_a(int n, double alpha, double beta);

/// Optimal single-target average at alpha = beta = 0: (cos t + sin t)^{2n} / 2^n.
double example_b(int n, double theta);

}  // namespace ggsa
