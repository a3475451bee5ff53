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
#include <vector>

#include "scpkit/core/engine.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/milp/master_model.hpp"

namespace scpkit::milp {

// Engine master backed by branch-and-bound. Every Solve re-solves the whole
// model from the root, starting the root LP from the previous root basis and
// seeding the incumbent with the latest cut's anchor.
class MilpCutMaster {
 public:
  explicit MilpCutMaster(MilpOptions options = {}) : options_(options) {}

  void Reset(const VariableLayout& layout, double eta_lower, double eta_upper) {
    model_ = MasterModel{layout, {}, eta_lower, std::max(eta_upper, eta_lower)};
    basis_ = Basis{};
    total_nodes_ = 0;
  }

  void RaiseEtaUpperBound(double value) { model_.eta_upper = std::max(model_.eta_upper, value); }

  void AddCut(const Cut& cut) { AppendCut(model_, cut); }

  MasterResult Solve() {
    const MilpModel milp = model_.ToMilp();
    std::vector<std::vector<double>> hints;
    if (!model_.cuts.empty()) {
      std::vector<double> hint = model_.cuts.back().anchor;
      hint.push_back(model_.eta_upper);
      hints.push_back(std::move(hint));
    }
    const MilpSolution solution = SolveMilp(milp, basis_.empty() ? nullptr : &basis_, hints, options_);
    total_nodes_ += solution.nodes;
    if (!solution.root_basis.empty()) basis_ = solution.root_basis;
    MasterResult result;
    result.feasible = solution.status == LpStatus::kOptimal;
    if (!result.feasible) return result;
    result.point.assign(solution.point.begin(), solution.point.end() - 1);
    result.eta = solution.point.back();
    return result;
  }

  const MasterModel& model() const { return model_; }
  std::size_t total_nodes() const { return total_nodes_; }

 private:
  MilpOptions options_;
  MasterModel model_;
  Basis basis_;
  std::size_t total_nodes_ = 0;
};

static_assert(MasterSolver<MilpCutMaster>);

}  // namespace scpkit::milp
