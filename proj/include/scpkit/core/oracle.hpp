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

#include <concepts>
#include <cstddef>
#include <vector>

#include "scpkit/core/types.hpp"

namespace scpkit {

struct Evaluation {
  double value = 0.0;
  std::vector<double> gradient;
};

// A data-driven objective f(z, θ; S) that can be evaluated, with a
// (sub)gradient, on any index subset S of its N data points. Points are
// z ∥ θ with the integer part stored as integral doubles.
template <class O>
concept SampledOracle = requires(const O& oracle, const std::vector<double>& x,
                                 const SubsetSample& sample) {
  { oracle.population() } -> std::convertible_to<std::size_t>;
  { oracle.Layout() } -> std::convertible_to<VariableLayout>;
  { oracle.Evaluate(x, sample) } -> std::convertible_to<Evaluation>;
  { oracle.Value(x, sample) } -> std::convertible_to<double>;
  { oracle.WarmStart() } -> std::convertible_to<std::vector<double>>;
  { oracle.EpigraphLowerBound() } -> std::convertible_to<double>;
};

// Oracles with continuous variables alongside integer ones supply
// θ ∈ argmin f(z, ·; S) for fixed z.
template <class O>
concept HasSubproblemSolver = requires(const O& oracle, const std::vector<double>& z,
                                       const SubsetSample& sample) {
  { oracle.SolveSubproblem(z, sample) } -> std::convertible_to<std::vector<double>>;
};

}  // namespace scpkit
