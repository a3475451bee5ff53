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
#include <numeric>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/oracle.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/problems/sparse_regression.hpp"

namespace scpkit::problems {

// Static stochastic knapsack, sample-average form: choose z ∈ {0,1}ᵏ to
// maximize Σ rᵢzᵢ − (c/N) Σⱼ [Σᵢ Wᵢʲzᵢ − q]⁺.
struct SskpData {
  Eigen::VectorXd r;  // k rewards
  RowMatrix w;        // N × k resource realizations
  double c = 4.0;
  double q = 20.0;

  std::size_t items() const { return static_cast<std::size_t>(r.size()); }
  std::size_t scenarios() const { return static_cast<std::size_t>(w.rows()); }

  void Validate() const {
    Require(w.cols() == r.size() && w.rows() >= 1 && r.size() >= 1, ErrorCode::kInvalidArgument,
            "reward and scenario dimensions disagree");
    Require(c > 0.0 && q > 0.0, ErrorCode::kInvalidArgument, "need c > 0 and q > 0");
  }
};

// (c/n) Σ_{j∈S} [Σᵢ Wᵢʲzᵢ − q]⁺.
inline double SskpCostValue(const SskpData& data, const std::vector<double>& z,
                            const SubsetSample& sample) {
  Require(z.size() == data.items(), ErrorCode::kInvalidArgument, "z length must equal k");
  const Eigen::Map<const Eigen::VectorXd> zz(z.data(), static_cast<Eigen::Index>(z.size()));
  double sum = 0.0;
  for (std::size_t j : sample.indices) {
    sum += std::max(data.w.row(static_cast<Eigen::Index>(j)).dot(zz) - data.q, 0.0);
  }
  return data.c * sum / static_cast<double>(sample.size());
}

// (c/n) Σ_{j∈S} Wʲ · 1{Σᵢ Wᵢʲzᵢ − q ≥ 0}.
inline std::vector<double> SskpCostGradient(const SskpData& data, const std::vector<double>& z,
                                            const SubsetSample& sample) {
  Require(z.size() == data.items(), ErrorCode::kInvalidArgument, "z length must equal k");
  const Eigen::Map<const Eigen::VectorXd> zz(z.data(), static_cast<Eigen::Index>(z.size()));
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(z.size()));
  for (std::size_t j : sample.indices) {
    const auto row = data.w.row(static_cast<Eigen::Index>(j));
    if (row.dot(zz) - data.q >= 0.0) g.noalias() += row.transpose();
  }
  g *= data.c / static_cast<double>(sample.size());
  return {g.data(), g.data() + g.size()};
}

// Σ rᵢzᵢ minus the sampled expected overrun cost.
inline double SskpObjective(const SskpData& data, const std::vector<double>& z,
                            const SubsetSample& sample) {
  double reward = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) reward += data.r(static_cast<Eigen::Index>(i)) * z[i];
  return reward - SskpCostValue(data, z, sample);
}

// The standard mixed-integer linear reformulation with one overrun variable
// per scenario, as a minimization of the negated objective:
//   min −Σ rᵢzᵢ + (c/N) Σⱼ xⱼ  s.t.  Wʲz − xⱼ ≤ q,  x ≥ 0,  z ∈ {0,1}ᵏ.
// Columns are z then x.
inline milp::MilpModel SskpLinearReformulation(const SskpData& data) {
  data.Validate();
  const std::size_t k = data.items();
  const std::size_t n = data.scenarios();
  Require(k + n <= 20000, ErrorCode::kResourceExhausted,
          "linear reformulation too large for the dense solver");
  milp::MilpModel model;
  milp::LpModel& lp = model.lp;
  lp.num_columns = k + n;
  lp.objective.assign(k + n, data.c / static_cast<double>(n));
  lp.lower.assign(k + n, 0.0);
  lp.upper.assign(k + n, milp::kInfinity);
  for (std::size_t i = 0; i < k; ++i) {
    lp.objective[i] = -data.r(static_cast<Eigen::Index>(i));
    lp.upper[i] = 1.0;
    model.integer_columns.push_back(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    milp::LpRow row;
    row.coefficients.assign(k + n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      row.coefficients[i] = data.w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
    }
    row.coefficients[k + j] = -1.0;
    row.sense = Sense::kLessEqual;
    row.rhs = data.q;
    lp.rows.push_back(std::move(row));
  }
  return model;
}

// Minimizes f(z; S) = −rᵀz + C(z; S), the negated knapsack objective.
class SskpOracle {
 public:
  explicit SskpOracle(const SskpData& data) : data_(&data) { data.Validate(); }

  std::size_t population() const { return data_->scenarios(); }

  VariableLayout Layout() const { return VariableLayout::Binary(data_->items()); }

  Evaluation Evaluate(const std::vector<double>& x, const SubsetSample& sample) const {
    Evaluation result;
    result.value = -SskpObjective(*data_, x, sample);
    result.gradient = SskpCostGradient(*data_, x, sample);
    for (std::size_t i = 0; i < x.size(); ++i) result.gradient[i] -= data_->r(static_cast<Eigen::Index>(i));
    return result;
  }

  double Value(const std::vector<double>& x, const SubsetSample& sample) const {
    return -SskpObjective(*data_, x, sample);
  }

  // Greedy by rᵢ/μ̂ᵢ, stopping before Σ μ̂ᵢzᵢ would exceed q.
  std::vector<double> WarmStart() const {
    const std::size_t k = data_->items();
    const Eigen::VectorXd mean = data_->w.colwise().mean().transpose();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto ratio = [&](std::size_t i) {
      const double m = mean(static_cast<Eigen::Index>(i));
      return m > 0.0 ? data_->r(static_cast<Eigen::Index>(i)) / m : std::numeric_limits<double>::infinity();
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ratio(a) > ratio(b); });
    std::vector<double> z(k, 0.0);
    double load = 0.0;
    for (std::size_t i : order) {
      const double m = mean(static_cast<Eigen::Index>(i));
      if (load + m > data_->q) break;
      load += m;
      z[i] = 1.0;
    }
    return z;
  }

  double EpigraphLowerBound() const { return -data_->r.cwiseMax(0.0).sum(); }

  const SskpData& data() const { return *data_; }

 private:
  const SskpData* data_;
};

}  // namespace scpkit::problems
