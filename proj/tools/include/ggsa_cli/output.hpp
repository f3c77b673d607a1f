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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ggsa::cli {

/// Validation failure detected before any computation; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

/// %.17g: 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

/// Writes `content` to `path` through a sibling temporary file and a rename.
/// An empty path writes to stdout.
void write_output(const std::filesystem::path& path, const std::string& content);

/// `base` with `suffix` inserted before the extension: out.csv -> out_a.csv.
std::filesystem::path with_suffix(const std::filesystem::path& base, std::string_view suffix,
                                  std::string_view extension = {});

/// Minimal RFC 4180 writer: CRLF-free, quotes fields containing , " or newline.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(std::uint64_t value);
  CsvWriter& field(int value) { return field(static_cast<std::uint64_t>(value)); }
  CsvWriter& field(bool value) { return field(std::string_view(value ? "true" : "false")); }
  void end_row();

  const std::string& str() const noexcept { return out_; }

 private:
  std::string out_;
  bool row_open_ = false;
};

}  // namespace ggsa::cli
