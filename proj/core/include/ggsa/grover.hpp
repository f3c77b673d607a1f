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

#include <cstdint>
#include <optional>
#include <vector>

#include "ggsa/marked_set.hpp"
#include "ggsa/qcore.hpp"

namespace ggsa {

/// Problem size, marked count and iteration count of one search, plus the
/// rotation angle theta = arccos(1 - 2r/N) and vartheta = theta (tau + 1/2).
class SearchConfig {
 public:
  /// Throws std::invalid_argument unless n is supported, 1 <= r <= 2^n and
  /// tau >= 0.
  SearchConfig(int n, std::uint64_t r, std::uint64_t tau);

  int qubits() const noexcept { return n_; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t marked_count() const noexcept { return r_; }
  std::uint64_t iterations() const noexcept { return tau_; }
  double theta() const noexcept { return theta_; }
  double vartheta() const noexcept { return vartheta_; }

 private:
  int n_;
  std::uint64_t r_;
  std::uint64_t tau_;
  double theta_;
  double vartheta_;
};

/// Rotation angle of one Grover iteration for r of N marked states.
double grover_angle(std::uint64_t N, std::uint64_t r);

/// Phase-flips the marked amplitudes. The |-> ancilla of the textbook oracle
/// only contributes this conditional sign, so it is not materialized.
PureState apply_oracle(const PureState& state, const MarkedSet& marked);

/// 2|eta><eta| - I.
PureState apply_diffusion(const PureState& state);

/// Applies G = D O `tau` times.
PureState grover_iterate(const PureState& state, const MarkedSet& marked, std::uint64_t tau);

/// Marked mass after `tau` Grover iterations.
double success_probability(const PureState& initial, const MarkedSet& marked, std::uint64_t tau);

struct RunReport {
  SearchConfig config;
  MarkedSet marked;
  double final_success;
  /// Success after 0, 1, ..., tau iterations.
  std::vector<double> per_iteration_success;
};

RunReport run_search(const PureState& initial, const MarkedSet& marked, std::uint64_t tau);

struct AverageOptions {
  /// Largest C(N, r) that may be enumerated.
  std::uint64_t max_sets = 10'000'000;
  /// Worker threads; 0 picks GGSA_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// Mean success probability over every r-subset of the basis, enumerated
/// lexicographically. Throws ResourceLimitError when C(N, r) exceeds the cap.
double average_over_all_sets(const PureState& initial, std::uint64_t r, std::uint64_t tau,
                             const AverageOptions& options = {});

/// average_over_all_sets for every tau in [0, max_tau] from a single sweep.
std::vector<double> average_trace_over_all_sets(const PureState& initial, std::uint64_t r,
                                                std::uint64_t max_tau,
                                                const AverageOptions& options = {});

/// Number of threads the enumeration uses when AverageOptions::threads == 0.
unsigned default_thread_count();

/// Coefficients of a state on the orthonormal frame
/// {|psi_M>, |psi_U>, |eta_U>, |eta_M>} built for one marked set.
///
/// |eta_M> and |eta_U> are the normalized uniform vectors on the marked and
/// unmarked indices; |psi_M> and |psi_U> are the Gram-Schmidt remainders of
/// the state's marked and unmarked parts. A remainder whose norm is at most
/// kDegenerateTolerance is absent and its coefficient is zero.
struct SubspaceCoords {
  std::uint64_t dimension = 0;
  std::uint64_t marked_count = 0;
  Complex c_psiM;
  Complex c_psiU;
  Complex c_etaU;
  Complex c_etaM;
  /// Marked mass of the initial state.
  double p0 = 0.0;
  Complex abar_M;
  Complex abar_U;
  bool has_psiM = false;
  bool has_psiU = false;
};

inline constexpr double kDegenerateTolerance = 1e-12;

/// The four frame vectors as dense amplitude buffers. Absent vectors are
/// all-zero.
struct SubspaceFrame {
  std::vector<Complex> psi_M;
  std::vector<Complex> psi_U;
  std::vector<Complex> eta_U;
  std::vector<Complex> eta_M;
};

SubspaceCoords subspace_decompose(const PureState& initial, const MarkedSet& marked);
SubspaceFrame subspace_frame(const PureState& initial, const MarkedSet& marked);

/// Applies the 4x4 Grover block diag(1, -1, R(theta)) config.iterations()
/// times in closed form. Throws std::invalid_argument if the coordinates
/// were built for a different (N, r).
SubspaceCoords evolve_subspace(const SubspaceCoords& coords, const SearchConfig& config);

/// |c_psiM|^2 + |c_etaM|^2: the weight on the marked plane.
double marked_mass(const SubspaceCoords& coords);

/// Rebuilds the dense vector sum_k c_k |frame_k>.
std::vector<Complex> reconstruct(const SubspaceCoords& coords, const SubspaceFrame& frame);

/// Norm of the component of `amplitudes` outside span(frame).
double frame_residual(std::span<const Complex> amplitudes, const SubspaceFrame& frame);

/// Brute-force means of the quantities that enter the averaged success
/// probability, taken over every r-subset.
struct SubsetMeans {
  double p0 = 0.0;
  double abar_M_sq = 0.0;
  double abar_U_sq = 0.0;
  /// Re(conj(abar_U) abar_M).
  double cross = 0.0;
};

SubsetMeans subset_means(const PureState& initial, std::uint64_t r,
                         const AverageOptions& options = {});

}  // namespace ggsa
