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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "scpkit/core/error.hpp"
#include "scpkit/core/random.hpp"
#include "scpkit/core/types.hpp"

namespace scpkit {

// Uniform n-subset of [0, N) drawn with Floyd's algorithm, returned sorted.
inline SubsetSample SampleWithoutReplacement(std::size_t population, std::size_t n,
                                             std::uint64_t seed, std::size_t iteration = 0) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "subset size must be >= 1");
  Require(n <= population, ErrorCode::kInvalidArgument, "subset size exceeds population");
  SubsetSample sample;
  sample.population = population;
  sample.seed = seed;
  sample.iteration = iteration;
  if (n == population) {
    sample.indices.resize(population);
    std::iota(sample.indices.begin(), sample.indices.end(), std::size_t{0});
    return sample;
  }
  Rng rng(seed);
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(2 * n);
  sample.indices.reserve(n);
  for (std::size_t j = population - n; j < population; ++j) {
    const auto t = static_cast<std::size_t>(rng.UniformIndex(j + 1));
    const std::size_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    sample.indices.push_back(pick);
  }
  std::sort(sample.indices.begin(), sample.indices.end());
  return sample;
}

inline SampleSizeRule FixedSampleSize(std::size_t n) {
  return [n](std::size_t population) { return std::min(population, n); };
}

}  // namespace scpkit
