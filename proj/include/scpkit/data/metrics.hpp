// Copyright 2026 The scpkit Authors.
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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "scpkit/core/error.hpp"

namespace scpkit::data {

inline constexpr double kMapeFloor = 1e-8;

// mean |pred − actual| / max(|actual|, 1e-8).
inline double Mape(const Eigen::VectorXd& pred, const Eigen::VectorXd& actual) {
  Require(pred.size() == actual.size(), ErrorCode::kInvalidArgument,
          "prediction and target lengths differ");
  Require(pred.size() >= 1, ErrorCode::kInvalidArgument, "need at least one prediction");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < pred.size(); ++i) {
    sum += std::abs(pred(i) - actual(i)) / std::max(std::abs(actual(i)), kMapeFloor);
  }
  return sum / static_cast<double>(pred.size());
}

// Indices j with x[j] > 0.5, ascending.
inline std::vector<std::size_t> SelectedIndices(const std::vector<double>& x, std::size_t count) {
  std::vector<std::size_t> selected;
  for (std::size_t j = 0; j < std::min(count, x.size()); ++j) {
    if (x[j] > 0.5) selected.push_back(j);
  }
  return selected;
}

// 64-bit FNV-1a over the sorted index list, as 16 hex digits.
inline std::string Fingerprint(const std::vector<std::size_t>& sorted_indices) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (std::size_t index : sorted_indices) {
    auto v = static_cast<std::uint64_t>(index);
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= v & 0xffU;
      hash *= 1099511628211ULL;
      v >>= 8;
    }
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace scpkit::data
