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

#include "ggsa_cli/serialize.hpp"

#include <limits>

#include "ggsa_cli/version.hpp"

namespace ggsa::cli {

using nlohmann::ordered_json;

ordered_json to_json(const RunReport& report) {
  ordered_json j;
  j["config"] = {{"n", report.config.qubits()},
                 {"N", report.config.dimension()},
                 {"r", report.config.marked_count()},
                 {"tau", report.config.iterations()},
                 {"theta", report.config.theta()},
                 {"vartheta", report.config.vartheta()}};
  j["marked"] = std::vector<std::uint64_t>(report.marked.indices().begin(),
                                           report.marked.indices().end());
  j["final_success"] = report.final_success;
  j["per_iteration_success"] = report.per_iteration_success;
  return j;
}

ordered_json to_json(const MinimizationReport& report) {
  ordered_json history = ordered_json::array();
  for (const auto& step : report.threshold_history) {
    history.push_back({{"index", step.index}, {"value", step.value}});
  }
  ordered_json j;
  j["seed"] = report.seed;
  j["result_index"] = report.result_index;
  j["result_value"] = report.result_value;
  j["threshold_history"] = std::move(history);
  j["oracle_calls_used"] = report.oracle_calls_used;
  j["rounds"] = report.rounds;
  j["converged"] = report.converged;
  j["termination"] = to_string(report.termination);
  return j;
}

ordered_json to_json(const SearchSchedule& schedule) {
  ordered_json j;
  j["growth"] = schedule.growth;
  j["initial_reach"] = schedule.initial_reach;
  if (schedule.max_oracle_calls == std::numeric_limits<std::uint64_t>::max()) {
    j["max_oracle_calls"] = "unlimited";
  } else {
    j["max_oracle_calls"] = schedule.max_oracle_calls;
  }
  j["stall_rounds"] = schedule.stall_rounds;
  j["round_attempts"] = schedule.round_attempts;
  return j;
}

ordered_json metadata(const std::string& command, ordered_json parameters) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  return j;
}

}  // namespace ggsa::cli
