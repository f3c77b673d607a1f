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

#include "ggsa/combinations.hpp"

#include <limits>
#include <stdexcept>

namespace ggsa {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const u128 wide =
        static_cast<u128>(result) * (n - k + i) / i;
    if (wide > kMax) return kMax;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

std::vector<std::uint64_t> unrank_combination(std::uint64_t n, std::uint64_t k,
                                              std::uint64_t rank) {
  if (rank >= binomial(n, k)) {
    throw std::invalid_argument("combination rank out of range");
  }
  std::vector<std::uint64_t> combo;
  combo.reserve(k);
  std::uint64_t next = 0;
  for (std::uint64_t slot = 0; slot < k; ++slot) {
    // Skip candidates whose block of completions lies entirely before rank.
    for (;; ++next) {
      const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
    }
    combo.push_back(next++);
  }
  return combo;
}

bool next_combination(std::span<std::uint64_t> combo, std::uint64_t n) noexcept {
  const std::size_t k = combo.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace ggsa
