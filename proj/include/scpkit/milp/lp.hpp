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
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/types.hpp"

namespace scpkit::milp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LpRow {
  std::vector<double> coefficients;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// min cᵀx  s.t.  rows, lower ≤ x ≤ upper. Dense storage.
struct LpModel {
  std::size_t num_columns = 0;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

enum class VarState : unsigned char { kBasic, kAtLower, kAtUpper, kFree };

// Column states over structural columns followed by one slack per row.
// Row i reads aᵢᵀx + sᵢ = bᵢ; the slack bounds encode the row sense.
struct Basis {
  std::size_t num_columns = 0;
  std::vector<VarState> states;
  std::vector<std::size_t> basic;  // basic[r] = column basic in row position r

  bool empty() const { return states.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> point;  // structural columns only
  double objective = 0.0;
  std::vector<double> row_duals;
  Basis basis;
  std::size_t pivots = 0;
};

struct LpOptions {
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  double breakdown_pivot = 1e-10;
  std::size_t degenerate_limit = 50;  // consecutive degenerate pivots before Bland's rule
  std::size_t refactor_interval = 64;
  std::size_t max_pivots = 0;  // 0: 20·(rows + columns) + 1000
};

// Bounded-variable primal simplex over an explicit dense basis inverse.
// Phase 1 minimizes the sum of bound infeasibilities of the basic variables,
// so any basis (slack basis, or a previous optimal basis after bound changes
// and appended rows) is a valid starting point.
class LpSolver {
 public:
  explicit LpSolver(const LpModel& model, LpOptions options = {})
      : options_(options), n_(model.num_columns), m_(model.rows.size()) {
    Require(model.objective.size() == n_ && model.lower.size() == n_ && model.upper.size() == n_,
            ErrorCode::kInvalidArgument, "lp column data size mismatch");
    a_.resize(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(n_));
    b_.resize(static_cast<Eigen::Index>(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& row = model.rows[i];
      Require(row.coefficients.size() == n_, ErrorCode::kInvalidArgument,
              "lp row length mismatch");
      for (std::size_t j = 0; j < n_; ++j) {
        Require(std::isfinite(row.coefficients[j]), ErrorCode::kInvalidArgument,
                "lp row coefficient is not finite");
        a_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row.coefficients[j];
      }
      b_(static_cast<Eigen::Index>(i)) = row.rhs;
    }
    cost_.assign(n_ + m_, 0.0);
    std::copy(model.objective.begin(), model.objective.end(), cost_.begin());
    base_lower_.resize(n_ + m_);
    base_upper_.resize(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) {
      base_lower_[j] = model.lower[j];
      base_upper_[j] = model.upper[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      switch (model.rows[i].sense) {
        case Sense::kLessEqual:
          base_lower_[n_ + i] = 0.0;
          base_upper_[n_ + i] = kInfinity;
          break;
        case Sense::kGreaterEqual:
          base_lower_[n_ + i] = -kInfinity;
          base_upper_[n_ + i] = 0.0;
          break;
        case Sense::kEqual:
          base_lower_[n_ + i] = 0.0;
          base_upper_[n_ + i] = 0.0;
          break;
      }
    }
  }

  std::size_t num_columns() const { return n_; }
  std::size_t num_rows() const { return m_; }

  // Solves with the model bounds.
  LpSolution Solve(const Basis* warm = nullptr) {
    return Solve(std::vector<double>(base_lower_.begin(), base_lower_.begin() + n_),
                 std::vector<double>(base_upper_.begin(), base_upper_.begin() + n_), warm);
  }

  // Solves with structural bounds overridden (branch-and-bound nodes).
  LpSolution Solve(const std::vector<double>& lower, const std::vector<double>& upper,
                   const Basis* warm = nullptr) {
    lower_ = base_lower_;
    upper_ = base_upper_;
    for (std::size_t j = 0; j < n_; ++j) {
      lower_[j] = lower[j];
      upper_[j] = upper[j];
      if (lower_[j] > upper_[j] + options_.primal_tolerance) {
        LpSolution infeasible;
        infeasible.status = LpStatus::kInfeasible;
        return infeasible;
      }
    }
    InitializeBasis(warm);
    return Iterate();
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double ColumnDot(const Eigen::VectorXd& y, std::size_t j) const {
    if (j < n_) return a_.col(static_cast<Eigen::Index>(j)).dot(y);
    return y(static_cast<Eigen::Index>(j - n_));
  }

  Eigen::VectorXd Column(std::size_t j) const {
    if (j < n_) return a_.col(static_cast<Eigen::Index>(j));
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m_));
    e(static_cast<Eigen::Index>(j - n_)) = 1.0;
    return e;
  }

  double NonbasicValue(std::size_t j) const {
    switch (states_[j]) {
      case VarState::kAtLower:
        return lower_[j];
      case VarState::kAtUpper:
        return upper_[j];
      default:
        return 0.0;
    }
  }

  VarState RestingState(std::size_t j, VarState preferred) const {
    const bool lo = std::isfinite(lower_[j]);
    const bool hi = std::isfinite(upper_[j]);
    if (preferred == VarState::kAtUpper && hi) return VarState::kAtUpper;
    if (lo) return VarState::kAtLower;
    if (hi) return VarState::kAtUpper;
    return VarState::kFree;
  }

  void SlackBasis() {
    states_.assign(n_ + m_, VarState::kAtLower);
    for (std::size_t j = 0; j < n_; ++j) states_[j] = RestingState(j, VarState::kAtLower);
    basic_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      states_[n_ + i] = VarState::kBasic;
      basic_[i] = n_ + i;
    }
  }

  void InitializeBasis(const Basis* warm) {
    bool ok = false;
    if (warm != nullptr && !warm->empty() && warm->num_columns == n_) {
      const std::size_t old_rows = warm->states.size() - n_;
      if (old_rows <= m_ && warm->basic.size() == old_rows) {
        states_.assign(n_ + m_, VarState::kBasic);
        std::copy(warm->states.begin(), warm->states.end(), states_.begin());
        basic_ = warm->basic;
        for (std::size_t i = old_rows; i < m_; ++i) basic_.push_back(n_ + i);
        for (std::size_t j = 0; j < n_ + m_; ++j) {
          if (states_[j] != VarState::kBasic) states_[j] = RestingState(j, states_[j]);
        }
        ok = Refactor();
      }
    }
    if (!ok) {
      SlackBasis();
      Refactor();
    }
  }

  // Recomputes B⁻¹ and the basic values from scratch.
  bool Refactor() {
    const auto m = static_cast<Eigen::Index>(m_);
    if (m_ == 0) {
      binv_.resize(0, 0);
      xb_.resize(0);
      since_refactor_ = 0;
      return true;
    }
    Eigen::MatrixXd basis_matrix(m, m);
    for (std::size_t r = 0; r < m_; ++r) basis_matrix.col(static_cast<Eigen::Index>(r)) = Column(basic_[r]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!(lu.rcond() > 1e-14)) return false;
    binv_ = lu.inverse();
    RecomputeBasicValues();
    since_refactor_ = 0;
    return true;
  }

  void RecomputeBasicValues() {
    Eigen::VectorXd rhs = b_;
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (states_[j] == VarState::kBasic) continue;
      const double v = NonbasicValue(j);
      if (v == 0.0) continue;
      if (j < n_) {
        rhs -= a_.col(static_cast<Eigen::Index>(j)) * v;
      } else {
        rhs(static_cast<Eigen::Index>(j - n_)) -= v;
      }
    }
    xb_ = binv_ * rhs;
  }

  double Infeasibility(std::size_t r) const {
    const std::size_t j = basic_[r];
    const double x = xb_(static_cast<Eigen::Index>(r));
    if (x < lower_[j] - options_.primal_tolerance) return lower_[j] - x;
    if (x > upper_[j] + options_.primal_tolerance) return x - upper_[j];
    return 0.0;
  }

  LpSolution Iterate() {
    const std::size_t max_pivots =
        options_.max_pivots > 0 ? options_.max_pivots : 20 * (m_ + n_) + 1000;
    std::size_t pivots = 0;
    std::size_t degenerate_run = 0;
    bool retried = false;
    const auto m = static_cast<Eigen::Index>(m_);
    Eigen::VectorXd cb(m);

    while (true) {
      if (since_refactor_ >= options_.refactor_interval) {
        Require(Refactor(), ErrorCode::kNumericFailure, "basis became singular");
      }
      bool phase_one = false;
      for (std::size_t r = 0; r < m_; ++r) {
        const std::size_t j = basic_[r];
        const double x = xb_(static_cast<Eigen::Index>(r));
        double c = 0.0;
        if (x < lower_[j] - options_.primal_tolerance) {
          c = -1.0;
          phase_one = true;
        } else if (x > upper_[j] + options_.primal_tolerance) {
          c = 1.0;
          phase_one = true;
        }
        cb(static_cast<Eigen::Index>(r)) = c;
      }
      if (!phase_one) {
        for (std::size_t r = 0; r < m_; ++r) cb(static_cast<Eigen::Index>(r)) = cost_[basic_[r]];
      }
      const Eigen::VectorXd y = binv_.transpose() * cb;

      // Pricing: Dantzig, or Bland (lowest eligible index) after a degenerate run.
      const bool bland = degenerate_run >= options_.degenerate_limit;
      std::size_t entering = kNone;
      double best = 0.0;
      int direction = 0;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        const VarState s = states_[j];
        if (s == VarState::kBasic) continue;
        if (lower_[j] == upper_[j]) continue;
        const double d = (phase_one ? 0.0 : cost_[j]) - ColumnDot(y, j);
        int dir = 0;
        if (d < -options_.dual_tolerance && (s == VarState::kAtLower || s == VarState::kFree)) dir = 1;
        if (d > options_.dual_tolerance && (s == VarState::kAtUpper || s == VarState::kFree)) dir = -1;
        if (dir == 0) continue;
        if (bland) {
          entering = j;
          direction = dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = j;
          direction = dir;
        }
      }

      if (entering == kNone) {
        if (phase_one) {
          LpSolution result;
          result.status = LpStatus::kInfeasible;
          result.pivots = pivots;
          return result;
        }
        return Finish(LpStatus::kOptimal, y, pivots);
      }

      Eigen::VectorXd alpha = binv_ * Column(entering);

      // Ratio test. Basic r moves at rate -direction·alpha_r.
      double step = upper_[entering] - lower_[entering];
      std::size_t leaving = kNone;
      VarState leaving_state = VarState::kAtLower;
      double leaving_pivot = 0.0;
      const double alpha_scale = std::max(1.0, alpha.cwiseAbs().maxCoeff());
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = alpha(static_cast<Eigen::Index>(r));
        if (std::abs(a) <= options_.pivot_tolerance * alpha_scale) continue;
        const double rate = -direction * a;
        const std::size_t j = basic_[r];
        const double x = xb_(static_cast<Eigen::Index>(r));
        double limit = kInfinity;
        VarState target = VarState::kAtLower;
        if (rate < 0.0) {
          if (x > upper_[j] + options_.primal_tolerance) {
            limit = (x - upper_[j]) / -rate;
            target = VarState::kAtUpper;
          } else if (x >= lower_[j] - options_.primal_tolerance && std::isfinite(lower_[j])) {
            limit = std::max(0.0, x - lower_[j]) / -rate;
            target = VarState::kAtLower;
          }
        } else {
          if (x < lower_[j] - options_.primal_tolerance) {
            limit = (lower_[j] - x) / rate;
            target = VarState::kAtLower;
          } else if (x <= upper_[j] + options_.primal_tolerance && std::isfinite(upper_[j])) {
            limit = std::max(0.0, upper_[j] - x) / rate;
            target = VarState::kAtUpper;
          }
        }
        if (!std::isfinite(limit)) continue;
        bool take = limit < step - 1e-12;
        if (!take && leaving != kNone && limit <= step + 1e-12) {
          take = bland ? j < basic_[leaving] : std::abs(a) > std::abs(leaving_pivot);
        }
        if (take) {
          step = std::min(step, limit);
          leaving = r;
          leaving_state = target;
          leaving_pivot = a;
        }
      }

      if (!std::isfinite(step)) {
        Require(!phase_one, ErrorCode::kNumericFailure, "unbounded phase-one ray");
        LpSolution result;
        result.status = LpStatus::kUnbounded;
        result.pivots = pivots;
        return result;
      }

      if (leaving != kNone && std::abs(leaving_pivot) < options_.breakdown_pivot) {
        Require(!retried, ErrorCode::kNumericFailure, "pivot below breakdown threshold");
        retried = true;
        Require(Refactor(), ErrorCode::kNumericFailure, "basis became singular");
        continue;
      }
      retried = false;

      // Move.
      const double delta = direction * step;
      xb_ -= alpha * delta;
      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;
      ++pivots;
      Require(pivots <= max_pivots, ErrorCode::kResourceExhausted, "simplex pivot limit reached");

      if (leaving == kNone) {
        // Bound flip of the entering variable.
        states_[entering] = direction > 0 ? VarState::kAtUpper : VarState::kAtLower;
        continue;
      }

      const double entering_value = NonbasicValue(entering) + delta;
      const std::size_t leaving_column = basic_[leaving];
      states_[leaving_column] = leaving_state;
      states_[entering] = VarState::kBasic;
      basic_[leaving] = entering;
      xb_(static_cast<Eigen::Index>(leaving)) = entering_value;

      // Product-form update of B⁻¹.
      const auto pr = static_cast<Eigen::Index>(leaving);
      const double pivot = alpha(pr);
      binv_.row(pr) /= pivot;
      const Eigen::RowVectorXd pivot_row = binv_.row(pr);
      alpha(pr) = 0.0;
      binv_.noalias() -= alpha * pivot_row;
      ++since_refactor_;
    }
  }

  LpSolution Finish(LpStatus status, const Eigen::VectorXd& y, std::size_t pivots) {
    LpSolution result;
    result.status = status;
    result.pivots = pivots;
    std::vector<double> x(n_ + m_);
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (states_[j] != VarState::kBasic) x[j] = NonbasicValue(j);
    }
    for (std::size_t r = 0; r < m_; ++r) x[basic_[r]] = xb_(static_cast<Eigen::Index>(r));
    result.point.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_));
    // Snap tiny bound violations left inside the primal tolerance.
    for (std::size_t j = 0; j < n_; ++j) {
      result.point[j] = std::clamp(result.point[j], lower_[j], upper_[j]);
    }
    result.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) result.objective += cost_[j] * result.point[j];
    result.row_duals.assign(y.data(), y.data() + y.size());
    result.basis.num_columns = n_;
    result.basis.states = states_;
    result.basis.basic = basic_;
    return result;
  }

  LpOptions options_;
  std::size_t n_;
  std::size_t m_;
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  std::vector<double> cost_;
  std::vector<double> base_lower_;
  std::vector<double> base_upper_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<VarState> states_;
  std::vector<std::size_t> basic_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  std::size_t since_refactor_ = 0;
};

inline LpSolution SolveLp(const LpModel& model, const Basis* warm = nullptr, LpOptions options = {}) {
  LpSolver solver(model, options);
  return solver.Solve(warm);
}

// Lagrangian lower bound g(y) = bᵀy + Σ_j min_{x_j ∈ [l_j, u_j]} (c_j − a_jᵀy) x_j,
// with slacks treated as columns. Valid for any y; -inf when y has the wrong
// sign for an inequality row beyond `tolerance`.
inline double LagrangianBound(const LpModel& model, const std::vector<double>& y,
                              double tolerance = 1e-9) {
  const std::size_t n = model.num_columns;
  double bound = 0.0;
  for (std::size_t i = 0; i < model.rows.size(); ++i) bound += model.rows[i].rhs * y[i];
  auto term = [&](double d, double lo, double hi) {
    if (std::abs(d) <= tolerance) {
      const double v = std::isfinite(lo) ? lo : (std::isfinite(hi) ? hi : 0.0);
      return d * v;
    }
    const double v = d > 0.0 ? lo : hi;
    if (!std::isfinite(v)) return -kInfinity;
    return d * v;
  };
  for (std::size_t j = 0; j < n; ++j) {
    double d = model.objective[j];
    for (std::size_t i = 0; i < model.rows.size(); ++i) d -= model.rows[i].coefficients[j] * y[i];
    bound += term(d, model.lower[j], model.upper[j]);
  }
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    double lo = 0.0;
    double hi = 0.0;
    if (model.rows[i].sense == Sense::kLessEqual) hi = kInfinity;
    if (model.rows[i].sense == Sense::kGreaterEqual) lo = -kInfinity;
    bound += term(-y[i], lo, hi);
  }
  return bound;
}

}  // namespace scpkit::milp
