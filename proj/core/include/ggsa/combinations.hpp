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
#include <span>
#include <vector>

namespace ggsa {

/// C(n, k), saturating at UINT64_MAX instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// The combination of rank `rank` among all k-subsets of [0, n) in
/// lexicographic order. Requires rank < C(n, k).
std::vector<std::uint64_t> unrank_combination(std::uint64_t n, std::uint64_t k,
                                              std::uint64_t rank);

/// Advances `combo` to its lexicographic successor. Returns false (and leaves
/// `combo` untouched) when it is already the last k-subset of [0, n).
bool next_combination(std::span<std::uint64_t> combo, std::uint64_t n) noexcept;

}  // namespace ggsa
