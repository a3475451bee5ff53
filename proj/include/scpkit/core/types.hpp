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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scpkit/core/error.hpp"

namespace scpkit {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;
};

// Linear row over the concatenated point z ∥ θ.
struct LinearConstraint {
  std::vector<double> coefficients;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// Variable layout of a problem: p1 integer variables followed by p2
// continuous variables, all bounded, plus static linear constraints.
struct VariableLayout {
  std::size_t integer_count = 0;
  std::size_t continuous_count = 0;
  std::vector<Bounds> integer_domain;
  std::vector<Bounds> continuous_domain;
  std::vector<LinearConstraint> constraints;

  std::size_t dimension() const { return integer_count + continuous_count; }

  Bounds bounds(std::size_t j) const {
    return j < integer_count ? integer_domain[j] : continuous_domain[j - integer_count];
  }

  void Validate() const {
    Require(dimension() >= 1, ErrorCode::kInvalidArgument, "layout has no variables");
    Require(integer_domain.size() == integer_count, ErrorCode::kInvalidArgument,
            "integer domain size mismatch");
    Require(continuous_domain.size() == continuous_count, ErrorCode::kInvalidArgument,
            "continuous domain size mismatch");
    for (const Bounds& b : integer_domain) {
      Require(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo <= b.hi &&
                  b.lo == std::floor(b.lo) && b.hi == std::floor(b.hi),
              ErrorCode::kInvalidArgument, "integer bounds must be finite integers with lo <= hi");
    }
    for (const Bounds& b : continuous_domain) {
      Require(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo <= b.hi,
              ErrorCode::kInvalidArgument, "continuous bounds must be finite with lo <= hi");
    }
    for (const LinearConstraint& row : constraints) {
      Require(row.coefficients.size() == dimension(), ErrorCode::kInvalidArgument,
              "constraint length does not match layout");
    }
  }

  // Σ_{j<p1} z_j = k as a pair of inequalities.
  void AddCardinality(double k) {
    std::vector<double> ones(dimension(), 0.0);
    for (std::size_t j = 0; j < integer_count; ++j) ones[j] = 1.0;
    constraints.push_back({ones, Sense::kLessEqual, k});
    constraints.push_back({ones, Sense::kGreaterEqual, k});
  }

  static VariableLayout Binary(std::size_t count) {
    VariableLayout layout;
    layout.integer_count = count;
    layout.integer_domain.assign(count, Bounds{0.0, 1.0});
    return layout;
  }

  static VariableLayout Continuous(std::size_t count, double lo, double hi) {
    VariableLayout layout;
    layout.continuous_count = count;
    layout.continuous_domain.assign(count, Bounds{lo, hi});
    return layout;
  }
};

// Sorted, duplicate-free subset of [0, population) with the seed that drew it.
struct SubsetSample {
  std::vector<std::size_t> indices;
  std::size_t population = 0;
  std::uint64_t seed = 0;
  std::size_t iteration = 0;
  bool full = false;

  std::size_t size() const { return indices.size(); }

  static SubsetSample Full(std::size_t population) {
    SubsetSample sample;
    sample.indices.resize(population);
    for (std::size_t i = 0; i < population; ++i) sample.indices[i] = i;
    sample.population = population;
    sample.full = true;
    return sample;
  }
};

enum class CutKind { kObjective, kConstraint };

// η ≥ value + gradientᵀ(x − anchor).
struct Cut {
  std::vector<double> anchor;
  double value = 0.0;
  std::vector<double> gradient;
  CutKind kind = CutKind::kObjective;
  std::size_t constraint_index = 0;
  // Seed of the subset the cut was built on; nullopt for the full data set.
  std::optional<std::uint64_t> sample_seed;

  double Evaluate(const std::vector<double>& x) const {
    double result = value;
    for (std::size_t j = 0; j < gradient.size(); ++j) result += gradient[j] * (x[j] - anchor[j]);
    return result;
  }

  void Validate(std::size_t dimension) const {
    Require(anchor.size() == dimension && gradient.size() == dimension,
            ErrorCode::kInvalidArgument, "cut dimension does not match layout");
    Require(std::isfinite(value), ErrorCode::kInvalidArgument, "cut value is not finite");
    for (std::size_t j = 0; j < dimension; ++j) {
      Require(std::isfinite(anchor[j]) && std::isfinite(gradient[j]),
              ErrorCode::kInvalidArgument, "cut data is not finite");
    }
  }
};

enum class Mode { kFull, kStochastic };

inline std::string_view ToString(Mode mode) {
  return mode == Mode::kFull ? "full" : "stochastic";
}

using SampleSizeRule = std::function<std::size_t(std::size_t)>;

// n = min(N, ceil(10 √N)).
inline std::size_t DefaultSampleSize(std::size_t population) {
  Require(population >= 1, ErrorCode::kInvalidArgument, "population must be >= 1");
  const auto scaled =
      static_cast<std::size_t>(std::ceil(10.0 * std::sqrt(static_cast<double>(population))));
  return scaled < population ? scaled : population;
}

struct EngineConfig {
  Mode mode = Mode::kFull;
  SampleSizeRule sample_size = DefaultSampleSize;
  double epsilon = 1e-4;
  // Overrides the oracle's epigraph lower bound when set.
  std::optional<double> eta_lower_bound;
  std::size_t max_iterations = 500;
  std::uint64_t seed = 0;

  void Validate() const {
    Require(epsilon > 0.0, ErrorCode::kInvalidArgument, "epsilon must be positive");
    Require(max_iterations >= 1, ErrorCode::kInvalidArgument, "max_iterations must be >= 1");
    Require(static_cast<bool>(sample_size), ErrorCode::kInvalidArgument, "missing sample-size rule");
  }
};

enum class RunStatus { kOptimal, kIterationCap, kInfeasible };

inline std::string_view ToString(RunStatus status) {
  switch (status) {
    case RunStatus::kOptimal:
      return "optimal";
    case RunStatus::kIterationCap:
      return "iteration-cap";
    case RunStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

struct TraceRecord {
  std::size_t iteration = 0;
  std::uint64_t sample_seed = 0;
  std::size_t sample_size = 0;
  double eta = 0.0;
  double sampled_objective = 0.0;
  double master_seconds = 0.0;
  double oracle_seconds = 0.0;
};

struct RunReport {
  RunStatus status = RunStatus::kIterationCap;
  std::vector<double> solution;  // z ∥ θ
  double eta = 0.0;
  std::size_t iterations = 0;
  std::vector<TraceRecord> trace;
  double full_objective_at_solution = 0.0;
  double wall_seconds = 0.0;
};

}  // namespace scpkit
