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

#include <nlohmann/json.hpp>

#include "ggsa/grover.hpp"
#include "ggsa/qmin.hpp"

namespace ggsa::cli {

nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const MinimizationReport& report);
nlohmann::ordered_json to_json(const SearchSchedule& schedule);

/// {"tool", "version", "command", "parameters"}.
nlohmann::ordered_json metadata(const std::string& command, nlohmann::ordered_json parameters);

}  // namespace ggsa::cli
