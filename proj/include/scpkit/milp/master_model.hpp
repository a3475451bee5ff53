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
#include <ostream>
#include <string>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/milp/lp.hpp"

namespace scpkit::milp {

// min η over z ∥ θ ∥ η subject to the layout's bounds and static rows and
// one row per accumulated cut. η is the last column, bounded to
// [eta_lower, eta_upper].
struct MasterModel {
  VariableLayout layout;
  std::vector<Cut> cuts;
  double eta_lower = 0.0;
  double eta_upper = 1.0;

  std::size_t eta_column() const { return layout.dimension(); }
  std::size_t num_rows() const { return layout.constraints.size() + cuts.size(); }

  // η − gᵀx ≥ f(anchor) − gᵀanchor.
  static LpRow CutRow(const Cut& cut) {
    LpRow row;
    row.coefficients.resize(cut.gradient.size() + 1);
    double rhs = cut.value;
    for (std::size_t j = 0; j < cut.gradient.size(); ++j) {
      row.coefficients[j] = -cut.gradient[j];
      rhs -= cut.gradient[j] * cut.anchor[j];
    }
    row.coefficients.back() = 1.0;
    row.sense = Sense::kGreaterEqual;
    row.rhs = rhs;
    return row;
  }

  MilpModel ToMilp() const {
    MilpModel milp;
    LpModel& lp = milp.lp;
    const std::size_t d = layout.dimension();
    lp.num_columns = d + 1;
    lp.objective.assign(d + 1, 0.0);
    lp.objective[d] = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      const Bounds b = layout.bounds(j);
      lp.lower.push_back(b.lo);
      lp.upper.push_back(b.hi);
    }
    lp.lower.push_back(eta_lower);
    lp.upper.push_back(eta_upper);
    for (const LinearConstraint& c : layout.constraints) {
      LpRow row{c.coefficients, c.sense, c.rhs};
      row.coefficients.push_back(0.0);
      lp.rows.push_back(std::move(row));
    }
    for (const Cut& cut : cuts) lp.rows.push_back(CutRow(cut));
    for (std::size_t j = 0; j < layout.integer_count; ++j) milp.integer_columns.push_back(j);
    return milp;
  }

  // Plain-text listing for diagnosis: objective, one "name: coeffs… sense rhs"
  // line per row, then bounds. Not meant to be parsed back.
  void Dump(std::ostream& out) const {
    const MilpModel milp = ToMilp();
    const std::size_t d = layout.dimension();
    auto name = [&](std::size_t j) {
      if (j == d) return std::string("eta");
      if (j < layout.integer_count) return "z" + std::to_string(j);
      return "theta" + std::to_string(j - layout.integer_count);
    };
    out << "minimize: eta\n";
    for (std::size_t i = 0; i < milp.lp.rows.size(); ++i) {
      const LpRow& row = milp.lp.rows[i];
      out << (i < layout.constraints.size() ? "static" + std::to_string(i)
                                            : "cut" + std::to_string(i - layout.constraints.size()))
          << ":";
      for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
        if (row.coefficients[j] != 0.0) out << ' ' << row.coefficients[j] << '*' << name(j);
      }
      out << (row.sense == Sense::kLessEqual ? " <= " : row.sense == Sense::kGreaterEqual ? " >= " : " = ")
          << row.rhs << '\n';
    }
    for (std::size_t j = 0; j <= d; ++j) {
      out << "bound: " << milp.lp.lower[j] << " <= " << name(j) << " <= " << milp.lp.upper[j]
          << (j < layout.integer_count ? " integer" : "") << '\n';
    }
  }
};

inline void AppendCut(MasterModel& model, Cut cut) {
  cut.Validate(model.layout.dimension());
  model.cuts.push_back(std::move(cut));
}

}  // namespace scpkit::milp
