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

#include "ggsa/marked_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ggsa {

MarkedSet::MarkedSet(std::vector<std::uint64_t> indices, std::uint64_t dimension)
    : indices_(std::move(indices)), dimension_(dimension) {
  if (indices_.empty()) {
    throw std::invalid_argument("marked set must contain at least one index");
  }
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("marked set contains duplicate indices");
  }
  if (indices_.back() >= dimension_) {
    throw std::invalid_argument("marked index " + std::to_string(indices_.back()) +
                                " outside [0, " + std::to_string(dimension_) + ")");
  }
}

bool MarkedSet::contains(std::uint64_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

MarkedSet MarkedSet::complement() const {
  std::vector<std::uint64_t> rest;
  rest.reserve(dimension_ - indices_.size());
  auto it = indices_.begin();
  for (std::uint64_t x = 0; x < dimension_; ++x) {
    if (it != indices_.end() && *it == x) {
      ++it;
    } else {
      rest.push_back(x);
    }
  }
  return MarkedSet(std::move(rest), dimension_);
}

}  // namespace ggsa
