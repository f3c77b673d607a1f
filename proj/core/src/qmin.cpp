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

#include "ggsa/qmin.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ggsa/analytics.hpp"
#include "ggsa/grover.hpp"

namespace ggsa {

namespace {

int table_qubits(std::size_t length) {
  if (length < 2 || (length & (length - 1)) != 0) {
    throw std::invalid_argument("objective table length " + std::to_string(length) +
                                " is not 2^n for n >= 1");
  }
  const int n = std::countr_zero(length);
  validate_qubit_count(n);
  return n;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_field(std::string_view text, std::size_t line) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("objective CSV line " + std::to_string(line) +
                                ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ObjectiveTable::ObjectiveTable(std::vector<double> values)
    : qubits_(table_qubits(values.size())), values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("objective values must be finite");
  }
}

ObjectiveTable ObjectiveTable::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open objective file " + path.string());

  std::string line;
  if (!std::getline(in, line) || trim(line) != "index,value") {
    throw std::invalid_argument("objective CSV must start with the header 'index,value'");
  }
  std::vector<std::pair<std::uint64_t, double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw std::invalid_argument("objective CSV line " + std::to_string(line_no) +
                                  ": expected two columns");
    }
    const std::string_view view(line);
    rows.emplace_back(parse_field<std::uint64_t>(view.substr(0, comma), line_no),
                      parse_field<double>(view.substr(comma + 1), line_no));
  }
  if (in.bad()) throw std::runtime_error("error reading objective file " + path.string());

  std::vector<double> values(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [index, value] : rows) {
    if (index >= rows.size() || seen[index]) {
      throw std::invalid_argument("objective CSV indices must cover [0, N) exactly once");
    }
    seen[index] = true;
    values[index] = value;
  }
  return ObjectiveTable(std::move(values));
}

ObjectiveTable ObjectiveTable::random_permutation(int n, std::uint64_t seed) {
  validate_qubit_count(n);
  std::vector<double> values(std::size_t{1} << n);
  std::iota(values.begin(), values.end(), 0.0);
  Rng rng(seed);
  // Fisher-Yates with the portable bounded draw.
  for (std::size_t i = values.size() - 1; i > 0; --i) {
    std::swap(values[i], values[rng.uniform_below(i + 1)]);
  }
  return ObjectiveTable(std::move(values));
}

ObjectiveTable ObjectiveTable::random_uniform(int n, std::uint64_t seed) {
  validate_qubit_count(n);
  std::vector<double> values(std::size_t{1} << n);
  Rng rng(seed);
  for (double& v : values) v = rng.uniform01();
  return ObjectiveTable(std::move(values));
}

ObjectiveTable ObjectiveTable::constant(int n, double value) {
  validate_qubit_count(n);
  return ObjectiveTable(std::vector<double>(std::size_t{1} << n, value));
}

std::vector<std::uint64_t> ObjectiveTable::argmin_set() const {
  const double lowest = *std::min_element(values_.begin(), values_.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < values_.size(); ++x) {
    if (values_[x] == lowest) out.push_back(x);
  }
  return out;
}

void SearchSchedule::validate() const {
  if (!(growth > 1.0 && growth <= 4.0 / 3.0)) {
    throw std::invalid_argument("schedule growth must lie in (1, 4/3]");
  }
  if (!(initial_reach >= 1.0) || !std::isfinite(initial_reach)) {
    throw std::invalid_argument("schedule initial reach must be >= 1");
  }
  if (max_oracle_calls == 0 || stall_rounds == 0 || round_attempts == 0) {
    throw std::invalid_argument("schedule budgets must be positive");
  }
}

std::optional<MarkedSet> threshold_marked_set(const ObjectiveTable& table, double d) {
  std::vector<std::uint64_t> below;
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    if (table[x] < d) below.push_back(x);
  }
  if (below.empty()) return std::nullopt;
  return MarkedSet(std::move(below), table.size());
}

std::uint64_t sample_measurement(const PureState& state, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  std::uint64_t last_supported = 0;
  for (std::uint64_t x = 0; x < state.dimension(); ++x) {
    const double p = std::norm(state[x]);
    if (p <= 0.0) continue;
    cumulative += p;
    last_supported = x;
    if (u < cumulative) return x;
  }
  // Round-off left the cumulative mass just under u.
  return last_supported;
}

ExponentialSearchResult exponential_search(const PureState& initial, const MarkedSet& marked,
                                           const SearchSchedule& schedule, Rng& rng,
                                           std::optional<std::uint64_t> budget) {
  schedule.validate();
  if (marked.dimension() != initial.dimension()) {
    throw std::invalid_argument("marked set and initial state dimensions differ");
  }
  const std::uint64_t limit = budget.value_or(schedule.max_oracle_calls);
  const double reach_cap = std::sqrt(static_cast<double>(initial.dimension()));

  ExponentialSearchResult result{0, 0, 0, false, false};
  double reach = schedule.initial_reach;
  while (result.attempts < schedule.round_attempts) {
    const auto span = static_cast<std::uint64_t>(std::ceil(reach));
    const std::uint64_t j = rng.uniform_below(span);
    if (j > limit - result.oracle_calls) {
      result.budget_exhausted = true;
      break;
    }
    result.oracle_calls += j;
    ++result.attempts;
    result.index = sample_measurement(grover_iterate(initial, marked, j), rng);
    if (marked.contains(result.index)) {
      result.verified = true;
      break;
    }
    reach = std::min(schedule.growth * reach, std::max(reach_cap, schedule.initial_reach));
  }
  return result;
}

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::EmptyMarkedSet:
      return "empty_marked_set";
    case Termination::Stalled:
      return "stalled";
    case Termination::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

MinimizationReport run_gqma(const ObjectiveTable& table, const std::optional<LocalGateParams>& init,
                            const SearchSchedule& schedule, std::uint64_t seed) {
  schedule.validate();
  const int n = table.qubits();
  const PureState initial = init ? prepare_ansatz_state(n, *init) : equal_superposition(n);

  Rng rng(seed);
  MinimizationReport report;
  report.seed = seed;

  std::uint64_t x = rng.uniform_below(table.size());
  double d = table[x];
  report.threshold_history.push_back({x, d});

  std::uint64_t stalled = 0;
  for (;;) {
    const auto marked = threshold_marked_set(table, d);
    if (!marked) {
      report.termination = Termination::EmptyMarkedSet;
      break;
    }
    if (report.oracle_calls_used >= schedule.max_oracle_calls) {
      report.termination = Termination::BudgetExhausted;
      break;
    }
    const ExponentialSearchResult found =
        exponential_search(initial, *marked, schedule, rng,
                           schedule.max_oracle_calls - report.oracle_calls_used);
    report.oracle_calls_used += found.oracle_calls;
    ++report.rounds;

    if (found.attempts > 0 && table[found.index] < d) {
      x = found.index;
      d = table[x];
      report.threshold_history.push_back({x, d});
      stalled = 0;
    } else {
      ++stalled;
    }
    if (found.budget_exhausted) {
      report.termination = Termination::BudgetExhausted;
      break;
    }
    if (stalled >= schedule.stall_rounds) {
      report.termination = Termination::Stalled;
      break;
    }
  }

  report.result_index = x;
  report.result_value = d;
  report.converged = report.termination != Termination::BudgetExhausted;
  return report;
}

double gqma_success_closed_form(std::uint64_t N, std::uint64_t tau_s, double fc) {
  return closed_form_average({N, 1, tau_s, fc});
}

}  // namespace ggsa
