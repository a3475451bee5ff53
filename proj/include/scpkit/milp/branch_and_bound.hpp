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
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/milp/lp.hpp"

namespace scpkit::milp {

// An LP plus the set of columns restricted to integers.
struct MilpModel {
  LpModel lp;
  std::vector<std::size_t> integer_columns;
};

struct MilpOptions {
  double integrality_tolerance = 1e-6;
  double absolute_gap = 1e-9;
  double relative_gap = 1e-9;
  std::size_t node_limit = 1000000;
  bool record_bounds = false;
  LpOptions lp;
};

struct MilpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> point;
  double objective = std::numeric_limits<double>::infinity();
  std::size_t nodes = 0;
  Basis root_basis;
  // Global best bound observed at each node selection (when recorded).
  std::vector<double> bound_trace;
};

struct BnBNode {
  std::vector<double> lower;
  std::vector<double> upper;
  double parent_bound = -kInfinity;
  std::size_t depth = 0;
  std::uint64_t order = 0;
  Basis basis;
};

namespace internal {

struct NodeOrder {
  bool operator()(const BnBNode& a, const BnBNode& b) const {
    if (a.parent_bound != b.parent_bound) return a.parent_bound > b.parent_bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.order < b.order;
  }
};

}  // namespace internal

// Branch-and-bound with best-bound node selection (equal bounds: deepest,
// then newest node first) and most-fractional branching (ties to the lowest
// column index). Nodes warm-start from their
// parent's optimal basis. `hints` are full column vectors whose integer part
// is tried as an incumbent (continuous part re-optimized) before branching.
inline MilpSolution SolveMilp(const MilpModel& model, const Basis* warm = nullptr,
                              const std::vector<std::vector<double>>& hints = {},
                              MilpOptions options = {}) {
  const LpModel& lp = model.lp;
  const std::size_t n = lp.num_columns;
  for (std::size_t j : model.integer_columns) {
    Require(j < n && std::isfinite(lp.lower[j]) && std::isfinite(lp.upper[j]),
            ErrorCode::kInvalidArgument, "integer columns must be bounded");
  }
  LpSolver solver(lp, options.lp);
  MilpSolution best;

  auto prune_level = [&]() {
    if (!std::isfinite(best.objective)) return kInfinity;
    return best.objective - (options.absolute_gap + options.relative_gap * std::abs(best.objective));
  };

  for (const std::vector<double>& hint : hints) {
    if (hint.size() != n) continue;
    std::vector<double> lower = lp.lower;
    std::vector<double> upper = lp.upper;
    bool inside = true;
    for (std::size_t j : model.integer_columns) {
      const double v = std::round(hint[j]);
      inside = inside && v >= lp.lower[j] && v <= lp.upper[j];
      lower[j] = upper[j] = v;
    }
    if (!inside) continue;
    const LpSolution s = solver.Solve(lower, upper, warm);
    if (s.status == LpStatus::kOptimal && s.objective < best.objective) {
      best.status = LpStatus::kOptimal;
      best.objective = s.objective;
      best.point = s.point;
    }
  }

  const LpSolution root = solver.Solve(lp.lower, lp.upper, warm);
  best.nodes = 1;
  if (root.status == LpStatus::kUnbounded) {
    best.status = LpStatus::kUnbounded;
    return best;
  }
  if (root.status == LpStatus::kInfeasible) {
    best.status = LpStatus::kInfeasible;
    return best;
  }
  best.root_basis = root.basis;

  std::priority_queue<BnBNode, std::vector<BnBNode>, internal::NodeOrder> open;
  std::uint64_t order = 0;

  // Processes an LP solution at a node: updates the incumbent or branches.
  auto expand = [&](const LpSolution& s, const std::vector<double>& lower,
                    const std::vector<double>& upper, std::size_t depth) {
    if (s.objective >= prune_level()) return;
    std::size_t branch = n;
    double most = options.integrality_tolerance;
    for (std::size_t j : model.integer_columns) {  // ascending: ties keep the lowest index
      const double v = s.point[j];
      const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > most) {
        most = frac;
        branch = j;
      }
    }
    if (branch == n) {
      best.status = LpStatus::kOptimal;
      best.objective = s.objective;
      best.point = s.point;
      for (std::size_t j : model.integer_columns) best.point[j] = std::round(best.point[j]);
      return;
    }
    const double v = s.point[branch];
    BnBNode down{lower, upper, s.objective, depth + 1, order++, s.basis};
    down.upper[branch] = std::floor(v);
    BnBNode up{lower, upper, s.objective, depth + 1, order++, s.basis};
    up.lower[branch] = std::ceil(v);
    open.push(std::move(down));
    open.push(std::move(up));
  };

  expand(root, lp.lower, lp.upper, 0);
  while (!open.empty()) {
    if (options.record_bounds) {
      best.bound_trace.push_back(std::min(open.top().parent_bound, best.objective));
    }
    BnBNode node = open.top();
    open.pop();
    if (node.parent_bound >= prune_level()) break;  // best-first: every open node is dominated
    Require(best.nodes < options.node_limit, ErrorCode::kResourceExhausted,
            "branch-and-bound node limit reached");
    ++best.nodes;
    const LpSolution s = solver.Solve(node.lower, node.upper, &node.basis);
    if (s.status != LpStatus::kOptimal) continue;
    expand(s, node.lower, node.upper, node.depth);
  }
  return best;
}

}  // namespace scpkit::milp
