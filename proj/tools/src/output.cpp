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

#include "ggsa_cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <system_error>

namespace ggsa::cli {

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_output(const std::filesystem::path& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " +
                             ec.message());
  }
}

std::filesystem::path with_suffix(const std::filesystem::path& base, std::string_view suffix,
                                  std::string_view extension) {
  std::filesystem::path out = base.parent_path() / base.stem();
  out += std::string(suffix);
  out += extension.empty() ? base.extension().string() : std::string(extension);
  return out;
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
  for (const auto& h : header) field(std::string_view(h));
  end_row();
}

CsvWriter& CsvWriter::field(std::string_view text) {
  if (row_open_) out_ += ',';
  row_open_ = true;
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
    out_ += text;
    return *this;
  }
  out_ += '"';
  for (char c : text) {
    if (c == '"') out_ += '"';
    out_ += c;
  }
  out_ += '"';
  return *this;
}

CsvWriter& CsvWriter::field(double value) { return field(std::string_view(format_double(value))); }

CsvWriter& CsvWriter::field(std::uint64_t value) {
  return field(std::string_view(std::to_string(value)));
}

void CsvWriter::end_row() {
  out_ += '\n';
  row_open_ = false;
}

}  // namespace ggsa::cli
