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
#include <optional>
#include <string>
#include <vector>

#include "ggsa/ansatz.hpp"
#include "ggsa/qmin.hpp"
#include "ggsa_cli/output.hpp"

namespace ggsa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;

struct VerifyTheorem1Options {
  std::vector<int> qubits{1, 2, 3, 4, 5};
  std::vector<std::uint64_t> marked_counts{1, 2, 3};
  std::uint64_t max_tau = 8;
  unsigned random_states = 20;
  std::uint64_t seed = 2024;
  std::uint64_t max_sets = 10'000'000;
  double tolerance = 1e-10;
  std::filesystem::path out;
  Format format = Format::Csv;
};

struct Fig4Options {
  int qubits = 5;
  std::vector<std::uint64_t> marked_counts{1, 2, 3, 4, 10};
  unsigned fc_points = 101;
  std::filesystem::path out;
  Format format = Format::Csv;
};

struct Fig5Options {
  int qubits_a = 2;
  std::vector<int> qubits_b{2, 3, 4};
  unsigned resolution = 101;
  std::filesystem::path out;
  Format format = Format::Csv;
};

struct GgsaRunOptions {
  int qubits = 0;
  std::vector<std::uint64_t> marked;
  std::uint64_t tau = 0;
  /// nullopt: equal superposition.
  std::optional<LocalGateParams> init;
  std::filesystem::path out;
  Format format = Format::Json;
};

struct QminOptions {
  std::optional<std::filesystem::path> objective_file;
  std::string generator = "permutation";
  int qubits = 6;
  std::uint64_t generator_seed = 0;
  double constant_value = 0.0;
  std::vector<std::uint64_t> seeds{0};
  SearchSchedule schedule;
  /// Budget as a multiple of sqrt(N); overrides schedule.max_oracle_calls.
  std::optional<double> budget_factor;
  std::optional<LocalGateParams> init;
  std::optional<double> min_success_rate;
  std::filesystem::path out;
};

/// Each command validates its options (throwing UsageError), computes, writes
/// its outputs and returns an exit code.
int cmd_verify_theorem1(const VerifyTheorem1Options& opts);
int cmd_fig4(const Fig4Options& opts);
int cmd_fig5(const Fig5Options& opts);
int cmd_ggsa_run(const GgsaRunOptions& opts);
int cmd_qmin(const QminOptions& opts);

/// "0-99" or "1,5,9" (ranges may be mixed with lists: "0-3,10").
std::vector<std::uint64_t> parse_index_list(const std::string& text);

}  // namespace ggsa::cli
