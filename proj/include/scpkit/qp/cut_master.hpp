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

#include <cstddef>
#include <vector>

#include "scpkit/core/engine.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/qp/qp_master.hpp"

namespace scpkit::qp {

// Engine master for continuous-only problems whose objective is
// ½‖θ‖² + C·f(θ): the epigraph variable η is the QP slack ξ.
class QpCutMaster {
 public:
  explicit QpCutMaster(double c, QpOptions options = {}) : c_(c), options_(options) {}

  void Reset(const VariableLayout& layout, double /*eta_lower*/, double /*eta_upper*/) {
    Require(layout.integer_count == 0, ErrorCode::kUnsupportedProblem,
            "the QP master handles continuous-only layouts");
    master_ = QpMaster{layout.continuous_count, c_, {}};
    unconverged_ = 0;
  }

  void RaiseEtaUpperBound(double /*value*/) {}

  // f(θ₀) + gᵀ(θ − θ₀) becomes ξ ≥ b − aᵀθ with a = −g, b = f(θ₀) − gᵀθ₀.
  void AddCut(const Cut& cut) {
    QpCut row;
    row.a.resize(cut.gradient.size());
    row.b = cut.value;
    for (std::size_t j = 0; j < cut.gradient.size(); ++j) {
      row.a[j] = -cut.gradient[j];
      row.b -= cut.gradient[j] * cut.anchor[j];
    }
    master_.cuts.push_back(std::move(row));
  }

  MasterResult Solve() {
    last_ = SolveQp(master_, options_);
    if (!last_.converged) ++unconverged_;
    MasterResult result;
    result.feasible = true;
    result.point = last_.theta;
    result.eta = last_.xi;
    return result;
  }

  const QpSolution& last_solution() const { return last_; }
  std::size_t unconverged_solves() const { return unconverged_; }

 private:
  double c_;
  QpOptions options_;
  QpMaster master_;
  QpSolution last_;
  std::size_t unconverged_ = 0;
};

static_assert(MasterSolver<QpCutMaster>);

}  // namespace scpkit::qp
