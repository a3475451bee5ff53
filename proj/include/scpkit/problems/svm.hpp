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
#include <cmath>
#include <cstddef>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/oracle.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/problems/sparse_regression.hpp"

namespace scpkit::problems {

struct SvmData {
  RowMatrix x;        // N × p
  Eigen::VectorXd y;  // ±1
  double c = 1.0;

  std::size_t rows() const { return static_cast<std::size_t>(x.rows()); }
  std::size_t features() const { return static_cast<std::size_t>(x.cols()); }

  void Validate() const {
    Require(x.rows() == y.size() && x.rows() >= 1, ErrorCode::kInvalidArgument,
            "features and labels disagree in length");
    Require(c > 0.0 && std::isfinite(c), ErrorCode::kInvalidArgument, "C must be positive");
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      Require(y(i) == 1.0 || y(i) == -1.0, ErrorCode::kInvalidArgument, "labels must be +1 or -1");
    }
  }
};

// Mean hinge loss (1/n) Σ max(1 − yᵢθᵀxᵢ, 0) over the sample.
inline double SvmRiskValue(const SvmData& data, const std::vector<double>& theta,
                           const SubsetSample& sample) {
  Require(theta.size() == data.features(), ErrorCode::kInvalidArgument, "theta length must equal p");
  const Eigen::Map<const Eigen::VectorXd> t(theta.data(), static_cast<Eigen::Index>(theta.size()));
  double sum = 0.0;
  for (std::size_t r : sample.indices) {
    const auto row = static_cast<Eigen::Index>(r);
    sum += std::max(1.0 - data.y(row) * data.x.row(row).dot(t), 0.0);
  }
  return sum / static_cast<double>(sample.size());
}

// −(1/n) Σ cᵢyᵢxᵢ with cᵢ = 1 iff yᵢθᵀxᵢ < 1. The leading minus makes
// R(θ') ≥ R(θ) + gᵀ(θ' − θ) hold.
inline Evaluation SvmRiskEvaluate(const SvmData& data, const std::vector<double>& theta,
                                  const SubsetSample& sample) {
  Require(theta.size() == data.features(), ErrorCode::kInvalidArgument, "theta length must equal p");
  const Eigen::Map<const Eigen::VectorXd> t(theta.data(), static_cast<Eigen::Index>(theta.size()));
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(theta.size()));
  double sum = 0.0;
  for (std::size_t r : sample.indices) {
    const auto row = static_cast<Eigen::Index>(r);
    const double margin = data.y(row) * data.x.row(row).dot(t);
    if (margin < 1.0) {
      sum += 1.0 - margin;
      g.noalias() -= data.y(row) * data.x.row(row).transpose();
    }
  }
  const double n = static_cast<double>(sample.size());
  Evaluation result;
  result.value = sum / n;
  g /= n;
  result.gradient.assign(g.data(), g.data() + g.size());
  return result;
}

inline std::vector<double> SvmRiskSubgradient(const SvmData& data, const std::vector<double>& theta,
                                              const SubsetSample& sample) {
  return SvmRiskEvaluate(data, theta, sample).gradient;
}

// Fraction of rows with sign(θᵀx) equal to the label (ties count as +1).
inline double SvmAccuracy(const SvmData& data, const std::vector<double>& theta) {
  const Eigen::Map<const Eigen::VectorXd> t(theta.data(), static_cast<Eigen::Index>(theta.size()));
  const Eigen::VectorXd scores = data.x * t;
  std::size_t hits = 0;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    const double predicted = scores(i) >= 0.0 ? 1.0 : -1.0;
    hits += predicted == data.y(i);
  }
  return static_cast<double>(hits) / static_cast<double>(scores.size());
}

// Continuous-only oracle for the risk term R(θ). The engine pairs it with the
// QP master, which adds ½‖θ‖² and the weight C.
class SvmRiskOracle {
 public:
  explicit SvmRiskOracle(const SvmData& data) : data_(&data) { data.Validate(); }

  std::size_t population() const { return data_->rows(); }

  // ½‖θ*‖² ≤ C·R(0) = C, so every optimum lies in the box ±√(2C).
  VariableLayout Layout() const {
    const double radius = std::sqrt(2.0 * data_->c) + 1.0;
    return VariableLayout::Continuous(data_->features(), -radius, radius);
  }

  Evaluation Evaluate(const std::vector<double>& x, const SubsetSample& sample) const {
    return SvmRiskEvaluate(*data_, x, sample);
  }

  double Value(const std::vector<double>& x, const SubsetSample& sample) const {
    return SvmRiskValue(*data_, x, sample);
  }

  std::vector<double> WarmStart() const { return std::vector<double>(data_->features(), 0.0); }

  double EpigraphLowerBound() const { return 0.0; }

  double regularization() const { return data_->c; }

  const SvmData& data() const { return *data_; }

 private:
  const SvmData* data_;
};

}  // namespace scpkit::problems
