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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ggsa {

/// A set of r marked basis indices inside a search space of N states.
///
/// Indices are kept strictly increasing; 1 <= r <= N. The search-space size
/// travels with the set so every consumer can validate against its state.
class MarkedSet {
 public:
  /// Sorts and validates `indices`. Throws std::invalid_argument on an empty
  /// set, duplicates, or an index outside [0, dimension).
  MarkedSet(std::vector<std::uint64_t> indices, std::uint64_t dimension);

  std::span<const std::uint64_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::uint64_t dimension() const noexcept { return dimension_; }
  bool contains(std::uint64_t index) const noexcept;

  /// The unmarked indices. Throws std::invalid_argument when r == N since the
  /// result would be empty.
  MarkedSet complement() const;

  friend bool operator==(const MarkedSet&, const MarkedSet&) = default;

 private:
  std::vector<std::uint64_t> indices_;
  std::uint64_t dimension_;
};

}  // namespace ggsa
