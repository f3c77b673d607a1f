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
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ggsa/ansatz.hpp"
#include "ggsa/marked_set.hpp"
#include "ggsa/qcore.hpp"
#include "ggsa/rng.hpp"

namespace ggsa {

/// f(x) for every x in [0, 2^n).
class ObjectiveTable {
 public:
  /// Throws std::invalid_argument unless the length is 2^n for a supported n
  /// and every value is finite.
  explicit ObjectiveTable(std::vector<double> values);

  /// Reads "index,value" rows after a mandatory header line. Every index in
  /// [0, 2^n) must appear exactly once. Throws std::runtime_error when the
  /// file cannot be read and std::invalid_argument when it is malformed.
  static ObjectiveTable load_csv(const std::filesystem::path& path);

  /// Values 0..N-1 in a seeded random order.
  static ObjectiveTable random_permutation(int n, std::uint64_t seed);
  /// Independent uniform reals in [0, 1).
  static ObjectiveTable random_uniform(int n, std::uint64_t seed);
  static ObjectiveTable constant(int n, double value);

  int qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t x) const { return values_[x]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Every index attaining the minimum, ascending.
  std::vector<std::uint64_t> argmin_set() const;

 private:
  int qubits_;
  std::vector<double> values_;
};

/// Exponential-search schedule: the reach m starts at `initial_reach`, each
/// attempt draws j uniformly from [0, ceil(m)) and then sets
/// m = min(growth * m, sqrt(N)).
struct SearchSchedule {
  double growth = 6.0 / 5.0;
  double initial_reach = 1.0;
  /// Total Grover iterations a minimization may spend.
  std::uint64_t max_oracle_calls = std::numeric_limits<std::uint64_t>::max();
  /// Consecutive rounds without a lower threshold after which a run stops.
  std::uint64_t stall_rounds = 3;
  /// Measurements one exponential search may take before giving up.
  std::uint64_t round_attempts = 100;

  /// Throws std::invalid_argument unless growth is in (1, 4/3],
  /// initial_reach >= 1 and every budget is positive.
  void validate() const;
};

/// Indices with f(x) < d, ascending; nullopt when no entry is below d.
std::optional<MarkedSet> threshold_marked_set(const ObjectiveTable& table, double d);

/// Born-rule measurement in the computational basis.
std::uint64_t sample_measurement(const PureState& state, Rng& rng);

struct ExponentialSearchResult {
  std::uint64_t index;
  std::uint64_t oracle_calls;
  std::uint64_t attempts;
  /// False when the search stopped (budget or attempt cap) before measuring a
  /// marked index; `index` is then the last measurement.
  bool verified;
  /// True when the next drawn iteration count did not fit the budget.
  bool budget_exhausted;
};

/// Repeated Grover runs with random iteration counts until a marked index is
/// measured. Charges j oracle calls per attempt against `budget`
/// (defaults to schedule.max_oracle_calls).
ExponentialSearchResult exponential_search(const PureState& initial, const MarkedSet& marked,
                                           const SearchSchedule& schedule, Rng& rng,
                                           std::optional<std::uint64_t> budget = std::nullopt);

enum class Termination { EmptyMarkedSet, Stalled, BudgetExhausted };

const char* to_string(Termination t) noexcept;

struct ThresholdStep {
  std::uint64_t index;
  double value;
  friend bool operator==(const ThresholdStep&, const ThresholdStep&) = default;
};

struct MinimizationReport {
  std::uint64_t result_index = 0;
  double result_value = 0.0;
  std::vector<ThresholdStep> threshold_history;
  std::uint64_t oracle_calls_used = 0;
  std::uint64_t rounds = 0;
  bool converged = false;
  Termination termination = Termination::EmptyMarkedSet;
  std::uint64_t seed = 0;
};

/// Threshold-descent minimization. `init` selects the product initial state
/// U(alpha, beta, theta)^{(x) n}|0^n>; nullopt means |eta>.
MinimizationReport run_gqma(const ObjectiveTable& table,
                            const std::optional<LocalGateParams>& init,
                            const SearchSchedule& schedule, std::uint64_t seed);

/// Single-target specialization of closed_form_average.
double gqma_success_closed_form(std::uint64_t N, std::uint64_t tau_s, double fc);

}  // namespace ggsa
