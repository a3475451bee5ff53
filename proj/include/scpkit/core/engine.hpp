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
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/oracle.hpp"
#include "scpkit/core/random.hpp"
#include "scpkit/core/sampling.hpp"
#include "scpkit/core/types.hpp"

namespace scpkit {

struct MasterResult {
  bool feasible = false;
  std::vector<double> point;  // z ∥ θ
  double eta = 0.0;
};

// Solver for min η over the accumulated cuts. The engine resets it once per
// run and then alternates AddCut / Solve.
template <class M>
concept MasterSolver = requires(M master, const VariableLayout& layout, const Cut& cut, double value) {
  master.Reset(layout, value, value);
  master.AddCut(cut);
  master.RaiseEtaUpperBound(value);
  { master.Solve() } -> std::same_as<MasterResult>;
};

// Largest violation of the static linear rows at `point`; 0 when feasible.
inline double EvaluateIncumbentFeasibility(const std::vector<double>& point,
                                           const VariableLayout& layout) {
  Require(point.size() == layout.dimension(), ErrorCode::kInvalidArgument,
          "point dimension does not match layout");
  double worst = 0.0;
  for (const LinearConstraint& row : layout.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += row.coefficients[j] * point[j];
    double violation = 0.0;
    switch (row.sense) {
      case Sense::kLessEqual:
        violation = lhs - row.rhs;
        break;
      case Sense::kGreaterEqual:
        violation = row.rhs - lhs;
        break;
      case Sense::kEqual:
        violation = std::abs(lhs - row.rhs);
        break;
    }
    worst = std::max(worst, violation);
  }
  return worst;
}

// θ minimizing f(z, ·; S) for fixed z. Problems without continuous variables
// return the empty vector.
template <SampledOracle O>
std::vector<double> SolveNlpSubproblem(const O& oracle, const std::vector<double>& z,
                                       const SubsetSample& sample, const VariableLayout& layout) {
  for (std::size_t j = 0; j < layout.integer_count; ++j) {
    const Bounds b = layout.integer_domain[j];
    Require(j < z.size() && z[j] >= b.lo && z[j] <= b.hi, ErrorCode::kInvalidArgument,
            "integer point outside its bounds");
  }
  if (layout.continuous_count == 0) return {};
  if constexpr (HasSubproblemSolver<O>) {
    return oracle.SolveSubproblem(z, sample);
  } else {
    throw Error(ErrorCode::kUnsupportedProblem,
                "problem has continuous variables but no subproblem solver");
  }
}

namespace internal {

inline double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace internal

// Cutting-plane loop. In full mode every oracle call uses all N data points;
// in stochastic mode each iteration draws a fresh subset of size
// config.sample_size(N), seeded by MixSeed(config.seed, iteration).
//
// Per iteration t: evaluate f and ∇f at the incumbent on Sₜ; stop when
// ηₜ ≥ f − ε and the static rows hold; otherwise add the cut, re-solve the
// master, draw Sₜ₊₁ and solve the subproblem for θ. Layouts without integer
// variables take θ straight from the master. f on [N] is evaluated once, after
// termination.
template <SampledOracle O, MasterSolver M>
RunReport RunCuttingPlanes(const O& oracle, const VariableLayout& layout, const EngineConfig& config,
                           M& master) {
  config.Validate();
  layout.Validate();
  const auto run_start = std::chrono::steady_clock::now();
  const std::size_t population = oracle.population();
  Require(population >= 1, ErrorCode::kInvalidArgument, "oracle has no data");
  const bool continuous_only = layout.integer_count == 0;
  if constexpr (!HasSubproblemSolver<O>) {
    Require(continuous_only || layout.continuous_count == 0, ErrorCode::kUnsupportedProblem,
            "problem has continuous variables but no subproblem solver");
  }

  const SubsetSample full = SubsetSample::Full(population);
  const std::size_t subset_size =
      config.mode == Mode::kFull ? population : config.sample_size(population);
  Require(subset_size >= 1 && subset_size <= population, ErrorCode::kInvalidArgument,
          "sample-size rule must return a value in [1, N]");
  auto draw = [&](std::size_t iteration) {
    if (config.mode == Mode::kFull) return full;
    return SampleWithoutReplacement(population, subset_size, MixSeed(config.seed, iteration),
                                    iteration);
  };

  const std::vector<double> warm_start = oracle.WarmStart();
  Require(warm_start.size() == layout.dimension(), ErrorCode::kInvalidArgument,
          "warm start dimension does not match layout");
  const double lower_bound = config.eta_lower_bound.value_or(oracle.EpigraphLowerBound());

  RunReport report;
  std::vector<double> point = warm_start;
  double eta = lower_bound;
  SubsetSample sample = draw(1);

  std::vector<double> best_point = point;
  double best_value = std::numeric_limits<double>::infinity();
  bool master_ready = false;

  for (std::size_t t = 1;; ++t) {
    const auto oracle_start = std::chrono::steady_clock::now();
    const Evaluation eval = oracle.Evaluate(point, sample);
    TraceRecord record;
    record.iteration = t;
    record.sample_seed = sample.seed;
    record.sample_size = sample.size();
    record.eta = eta;
    record.sampled_objective = eval.value;
    record.oracle_seconds = internal::SecondsSince(oracle_start);

    if (!master_ready) {
      // Any cut evaluated at the (feasible) warm start bounds the optimal η
      // from above; RaiseEtaUpperBound keeps this true as cuts arrive.
      master.Reset(layout, lower_bound, std::max(lower_bound, eval.value) + 1.0);
      master_ready = true;
    }
    if (eval.value < best_value) {
      best_value = eval.value;
      best_point = point;
    }

    const bool feasible = EvaluateIncumbentFeasibility(point, layout) <= 1e-9;
    if (eta >= eval.value - config.epsilon && feasible) {
      report.trace.push_back(record);
      report.status = RunStatus::kOptimal;
      report.solution = point;
      report.eta = eta;
      break;
    }
    if (t >= config.max_iterations) {
      report.trace.push_back(record);
      report.status = RunStatus::kIterationCap;
      report.solution = best_point;
      report.eta = eta;
      break;
    }

    Cut cut;
    cut.anchor = point;
    cut.value = eval.value;
    cut.gradient = eval.gradient;
    if (!sample.full) cut.sample_seed = sample.seed;
    cut.Validate(layout.dimension());
    master.RaiseEtaUpperBound(cut.Evaluate(warm_start) + 1.0);
    master.AddCut(cut);

    const auto master_start = std::chrono::steady_clock::now();
    MasterResult next = master.Solve();
    record.master_seconds = internal::SecondsSince(master_start);
    report.trace.push_back(record);
    if (!next.feasible) {
      report.status = RunStatus::kInfeasible;
      report.solution = point;
      report.eta = eta;
      break;
    }

    sample = draw(t + 1);
    point = std::move(next.point);
    eta = next.eta;
    if (!continuous_only && layout.continuous_count > 0) {
      const std::vector<double> z(point.begin(),
                                  point.begin() + static_cast<std::ptrdiff_t>(layout.integer_count));
      const std::vector<double> theta = SolveNlpSubproblem(oracle, z, sample, layout);
      std::copy(theta.begin(), theta.end(),
                point.begin() + static_cast<std::ptrdiff_t>(layout.integer_count));
    }
  }

  report.iterations = report.trace.size();
  report.full_objective_at_solution = oracle.Value(report.solution, full);
  report.wall_seconds = internal::SecondsSince(run_start);
  return report;
}

}  // namespace scpkit
