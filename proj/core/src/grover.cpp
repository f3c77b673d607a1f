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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "ggsa/combinations.hpp"
#include "ggsa/compensated_sum.hpp"
#include "ggsa/error.hpp"

namespace ggsa {

namespace {

void require_same_dimension(const PureState& state, const MarkedSet& marked) {
  if (marked.dimension() != state.dimension()) {
    throw std::invalid_argument("marked set built for N = " + std::to_string(marked.dimension()) +
                                ", state has N = " + std::to_string(state.dimension()));
  }
}

void oracle_in_place(std::span<Complex> amps, std::span<const std::uint64_t> marked) {
  for (std::uint64_t m : marked) amps[m] = -amps[m];
}

void diffusion_in_place(std::span<Complex> amps) {
  Complex total = 0.0;
  for (const Complex& a : amps) total += a;
  const Complex twice_mean = 2.0 * total / static_cast<double>(amps.size());
  for (Complex& a : amps) a = twice_mean - a;
}

double marked_mass_of(std::span<const Complex> amps, std::span<const std::uint64_t> marked) {
  double mass = 0.0;
  for (std::uint64_t m : marked) mass += std::norm(amps[m]);
  return mass;
}

void require_r(std::uint64_t N, std::uint64_t r) {
  if (r < 1 || r > N) {
    throw std::invalid_argument("marked count r = " + std::to_string(r) + " outside [1, " +
                                std::to_string(N) + "]");
  }
}

constexpr std::uint64_t kChunkSize = 2048;

// Evaluates `width` per-set quantities over every r-subset of [0, N) and
// returns their means. Sets are split into fixed-size rank chunks; each chunk
// is summed with compensation and the chunk sums are reduced in rank order,
// so the result does not depend on the thread count.
template <class MakeWorker>
std::vector<double> mean_over_all_sets(std::uint64_t N, std::uint64_t r, std::size_t width,
                                       const AverageOptions& options, MakeWorker make_worker) {
  require_r(N, r);
  const std::uint64_t total = binomial(N, r);
  if (total > options.max_sets) {
    throw ResourceLimitError("C(" + std::to_string(N) + ", " + std::to_string(r) +
                             ") = " + std::to_string(total) +
                             " marked sets exceeds the enumeration cap of " +
                             std::to_string(options.max_sets));
  }
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<std::vector<CompensatedSum>> partial(chunks, std::vector<CompensatedSum>(width));

  std::atomic<std::uint64_t> next_chunk{0};
  auto run = [&] {
    auto worker = make_worker();
    std::vector<double> values(width);
    for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(total, begin + kChunkSize);
      std::vector<std::uint64_t> combo = unrank_combination(N, r, begin);
      for (std::uint64_t rank = begin; rank < end; ++rank) {
        worker(std::span<const std::uint64_t>(combo), std::span<double>(values));
        for (std::size_t k = 0; k < width; ++k) partial[c][k].add(values[k]);
        next_combination(combo, N);
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }

  std::vector<double> means(width);
  for (std::size_t k = 0; k < width; ++k) {
    CompensatedSum sum;
    for (const auto& chunk : partial) sum.add(chunk[k]);
    means[k] = sum.value() / static_cast<double>(total);
  }
  return means;
}

Complex mean_over(std::span<const Complex> amps, const MarkedSet& marked, bool inside) {
  Complex total = 0.0;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if (marked.contains(x) == inside) {
      total += amps[x];
      ++count;
    }
  }
  return count == 0 ? Complex{} : total / static_cast<double>(count);
}

}  // namespace

double grover_angle(std::uint64_t N, std::uint64_t r) {
  require_r(N, r);
  const double c = 1.0 - 2.0 * static_cast<double>(r) / static_cast<double>(N);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

SearchConfig::SearchConfig(int n, std::uint64_t r, std::uint64_t tau) : n_(n), r_(r), tau_(tau) {
  validate_qubit_count(n);
  theta_ = grover_angle(dimension(), r);
  vartheta_ = theta_ * (static_cast<double>(tau) + 0.5);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("GGSA_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PureState apply_oracle(const PureState& state, const MarkedSet& marked) {
  require_same_dimension(state, marked);
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  oracle_in_place(amps, marked.indices());
  return PureState::from_amplitudes(std::move(amps));
}

PureState apply_diffusion(const PureState& state) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  diffusion_in_place(amps);
  return PureState::from_amplitudes(std::move(amps));
}

PureState grover_iterate(const PureState& state, const MarkedSet& marked, std::uint64_t tau) {
  require_same_dimension(state, marked);
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::uint64_t step = 0; step < tau; ++step) {
    oracle_in_place(amps, marked.indices());
    diffusion_in_place(amps);
  }
  return PureState::from_amplitudes(std::move(amps));
}

double success_probability(const PureState& initial, const MarkedSet& marked, std::uint64_t tau) {
  return success_mass(grover_iterate(initial, marked, tau), marked);
}

RunReport run_search(const PureState& initial, const MarkedSet& marked, std::uint64_t tau) {
  require_same_dimension(initial, marked);
  SearchConfig config(initial.qubits(), marked.size(), tau);
  std::vector<Complex> amps(initial.amplitudes().begin(), initial.amplitudes().end());
  std::vector<double> trace;
  trace.reserve(tau + 1);
  trace.push_back(marked_mass_of(amps, marked.indices()));
  for (std::uint64_t step = 0; step < tau; ++step) {
    oracle_in_place(amps, marked.indices());
    diffusion_in_place(amps);
    trace.push_back(marked_mass_of(amps, marked.indices()));
  }
  // Construction re-checks the norm of the evolved state.
  (void)PureState::from_amplitudes(std::move(amps));
  const double final_success = trace.back();
  return RunReport{config, marked, final_success, std::move(trace)};
}

std::vector<double> average_trace_over_all_sets(const PureState& initial, std::uint64_t r,
                                                std::uint64_t max_tau,
                                                const AverageOptions& options) {
  const std::span<const Complex> source = initial.amplitudes();
  return mean_over_all_sets(initial.dimension(), r, max_tau + 1, options, [&] {
    return [source, max_tau, buffer = std::vector<Complex>(source.size())](
               std::span<const std::uint64_t> marked, std::span<double> out) mutable {
      std::copy(source.begin(), source.end(), buffer.begin());
      out[0] = marked_mass_of(buffer, marked);
      for (std::uint64_t step = 1; step <= max_tau; ++step) {
        oracle_in_place(buffer, marked);
        diffusion_in_place(buffer);
        out[step] = marked_mass_of(buffer, marked);
      }
    };
  });
}

double average_over_all_sets(const PureState& initial, std::uint64_t r, std::uint64_t tau,
                             const AverageOptions& options) {
  return average_trace_over_all_sets(initial, r, tau, options).back();
}

SubspaceCoords subspace_decompose(const PureState& initial, const MarkedSet& marked) {
  require_same_dimension(initial, marked);
  const auto amps = initial.amplitudes();
  const std::uint64_t N = initial.dimension();
  const std::uint64_t r = marked.size();

  SubspaceCoords c;
  c.dimension = N;
  c.marked_count = r;
  c.p0 = success_mass(initial, marked);
  c.abar_M = mean_over(amps, marked, true);
  c.abar_U = mean_over(amps, marked, false);

  // Remainder norms are accumulated directly rather than as P0 - r|abar|^2 to
  // avoid cancellation near |eta>.
  double rem_M = 0.0;
  double rem_U = 0.0;
  for (std::uint64_t x = 0; x < N; ++x) {
    if (marked.contains(x)) {
      rem_M += std::norm(amps[x] - c.abar_M);
    } else {
      rem_U += std::norm(amps[x] - c.abar_U);
    }
  }
  rem_M = std::sqrt(rem_M);
  rem_U = std::sqrt(rem_U);

  c.c_etaM = std::sqrt(static_cast<double>(r)) * c.abar_M;
  c.c_etaU = std::sqrt(static_cast<double>(N - r)) * c.abar_U;
  c.has_psiM = rem_M > kDegenerateTolerance;
  c.has_psiU = rem_U > kDegenerateTolerance;
  c.c_psiM = c.has_psiM ? rem_M : 0.0;
  c.c_psiU = c.has_psiU ? rem_U : 0.0;
  return c;
}

SubspaceFrame subspace_frame(const PureState& initial, const MarkedSet& marked) {
  const SubspaceCoords c = subspace_decompose(initial, marked);
  const std::uint64_t N = c.dimension;
  const std::uint64_t r = c.marked_count;
  const auto amps = initial.amplitudes();

  SubspaceFrame f;
  f.psi_M.assign(N, 0.0);
  f.psi_U.assign(N, 0.0);
  f.eta_M.assign(N, 0.0);
  f.eta_U.assign(N, 0.0);
  const double eta_m = 1.0 / std::sqrt(static_cast<double>(r));
  const double eta_u = r < N ? 1.0 / std::sqrt(static_cast<double>(N - r)) : 0.0;
  for (std::uint64_t x = 0; x < N; ++x) {
    if (marked.contains(x)) {
      f.eta_M[x] = eta_m;
      if (c.has_psiM) f.psi_M[x] = (amps[x] - c.abar_M) / c.c_psiM.real();
    } else {
      f.eta_U[x] = eta_u;
      if (c.has_psiU) f.psi_U[x] = (amps[x] - c.abar_U) / c.c_psiU.real();
    }
  }
  return f;
}

SubspaceCoords evolve_subspace(const SubspaceCoords& coords, const SearchConfig& config) {
  if (coords.dimension != config.dimension() || coords.marked_count != config.marked_count()) {
    throw std::invalid_argument("subspace coordinates do not match the search configuration");
  }
  const std::uint64_t tau = config.iterations();
  const double angle = config.theta() * static_cast<double>(tau);
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);

  SubspaceCoords out = coords;
  out.c_psiU = (tau % 2 == 0) ? coords.c_psiU : -coords.c_psiU;
  out.c_etaU = cs * coords.c_etaU - sn * coords.c_etaM;
  out.c_etaM = sn * coords.c_etaU + cs * coords.c_etaM;
  return out;
}

double marked_mass(const SubspaceCoords& coords) {
  return std::norm(coords.c_psiM) + std::norm(coords.c_etaM);
}

std::vector<Complex> reconstruct(const SubspaceCoords& coords, const SubspaceFrame& frame) {
  std::vector<Complex> out(frame.eta_M.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x] = coords.c_psiM * frame.psi_M[x] + coords.c_psiU * frame.psi_U[x] +
             coords.c_etaU * frame.eta_U[x] + coords.c_etaM * frame.eta_M[x];
  }
  return out;
}

double frame_residual(std::span<const Complex> amplitudes, const SubspaceFrame& frame) {
  if (amplitudes.size() != frame.eta_M.size()) {
    throw std::invalid_argument("frame and vector have different dimensions");
  }
  std::vector<Complex> rest(amplitudes.begin(), amplitudes.end());
  for (const auto* basis : {&frame.psi_M, &frame.psi_U, &frame.eta_U, &frame.eta_M}) {
    Complex overlap = 0.0;
    for (std::size_t x = 0; x < rest.size(); ++x) overlap += std::conj((*basis)[x]) * amplitudes[x];
    for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= overlap * (*basis)[x];
  }
  return std::sqrt(squared_norm(rest));
}

SubsetMeans subset_means(const PureState& initial, std::uint64_t r, const AverageOptions& options) {
  const std::span<const Complex> amps = initial.amplitudes();
  const std::uint64_t N = initial.dimension();
  Complex total = 0.0;
  for (const Complex& a : amps) total += a;

  const auto means = mean_over_all_sets(N, r, 4, options, [&] {
    return [amps, N, total](std::span<const std::uint64_t> marked, std::span<double> out) {
      Complex in_sum = 0.0;
      double p0 = 0.0;
      for (std::uint64_t m : marked) {
        in_sum += amps[m];
        p0 += std::norm(amps[m]);
      }
      const double r_d = static_cast<double>(marked.size());
      const Complex abar_M = in_sum / r_d;
      const Complex abar_U =
          marked.size() < N ? (total - in_sum) / static_cast<double>(N - marked.size()) : Complex{};
      out[0] = p0;
      out[1] = std::norm(abar_M);
      out[2] = std::norm(abar_U);
      out[3] = (std::conj(abar_U) * abar_M).real();
    };
  });
  return SubsetMeans{means[0], means[1], means[2], means[3]};
}

}  // namespace ggsa
