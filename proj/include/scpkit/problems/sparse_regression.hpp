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

namespace scpkit::problems {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SparseRegressionData {
  RowMatrix x;        // N × p
  Eigen::VectorXd y;  // N
  std::size_t k = 1;
  double gamma = 1.0;

  std::size_t rows() const { return static_cast<std::size_t>(x.rows()); }
  std::size_t features() const { return static_cast<std::size_t>(x.cols()); }

  void Validate() const {
    Require(x.rows() == y.size() && x.rows() >= 1, ErrorCode::kInvalidArgument,
            "design matrix and response disagree in length");
    Require(k >= 1 && k <= features(), ErrorCode::kInvalidArgument, "need 1 <= k <= p");
    Require(gamma > 0.0 && std::isfinite(gamma), ErrorCode::kInvalidArgument, "gamma must be positive");
    Require(x.allFinite() && y.allFinite(), ErrorCode::kInvalidArgument, "data must be finite");
  }
};

namespace internal {

// Shared evaluation of f(z; S) = (1/n) yₛᵀ(Iₙ + γ Σ zᵢ XₛᵢXₛᵢᵀ)⁻¹yₛ through the
// matrix inversion lemma with V = Xₛ,ₐ diag(√z_A), A = {i : zᵢ > 0}:
//   f = (1/n)(yₛᵀyₛ − yₛᵀV (I/γ + VᵀV)⁻¹ Vᵀyₛ).
// Only a |A|×|A| Cholesky factorization is formed. With a gradient request,
// α = yₛ − V w (w = (I/γ + VᵀV)⁻¹Vᵀyₛ) and ∂f/∂zᵢ = −(γ/n)(Xₛᵢᵀα)².
inline Evaluation SparseRegressionEvaluate(const SparseRegressionData& data,
                                           const std::vector<double>& z,
                                           const SubsetSample& sample, bool with_gradient) {
  const std::size_t p = data.features();
  Require(z.size() == p, ErrorCode::kInvalidArgument, "support vector length must equal p");
  Require(sample.size() >= 1, ErrorCode::kInvalidArgument, "sample must be nonempty");
  std::vector<Eigen::Index> active;
  std::vector<double> scale;
  for (std::size_t i = 0; i < p; ++i) {
    if (z[i] > 0.0) {
      active.push_back(static_cast<Eigen::Index>(i));
      scale.push_back(std::sqrt(z[i]));
    }
  }
  const auto a = static_cast<Eigen::Index>(active.size());
  const double n = static_cast<double>(sample.size());

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(a, a);
  Eigen::VectorXd vy = Eigen::VectorXd::Zero(a);
  Eigen::VectorXd v(a);
  double yy = 0.0;
  for (std::size_t r : sample.indices) {
    const auto row = static_cast<Eigen::Index>(r);
    const double yr = data.y(row);
    yy += yr * yr;
    for (Eigen::Index q = 0; q < a; ++q) v(q) = data.x(row, active[static_cast<std::size_t>(q)]) * scale[static_cast<std::size_t>(q)];
    gram.selfadjointView<Eigen::Lower>().rankUpdate(v);
    vy += v * yr;
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  gram.diagonal().array() += 1.0 / data.gamma;

  Eigen::VectorXd w = Eigen::VectorXd::Zero(a);
  if (a > 0) {
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) {
      gram.diagonal().array() += 1e-10;
      llt.compute(gram);
      Require(llt.info() == Eigen::Success, ErrorCode::kNumericFailure,
              "Cholesky factorization failed after jitter");
    }
    w = llt.solve(vy);
  }

  Evaluation result;
  result.value = (yy - vy.dot(w)) / n;
  if (!with_gradient) return result;

  Eigen::VectorXd h = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
  for (std::size_t r : sample.indices) {
    const auto row = static_cast<Eigen::Index>(r);
    double alpha = data.y(row);
    for (Eigen::Index q = 0; q < a; ++q) {
      alpha -= data.x(row, active[static_cast<std::size_t>(q)]) * scale[static_cast<std::size_t>(q)] * w(q);
    }
    h.noalias() += data.x.row(row).transpose() * alpha;
  }
  result.gradient.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    const double hi = h(static_cast<Eigen::Index>(i));
    result.gradient[i] = -(data.gamma / n) * hi * hi;
  }
  return result;
}

}  // namespace internal

inline double SparseRegressionValue(const SparseRegressionData& data, const std::vector<double>& z,
                                    const SubsetSample& sample) {
  return internal::SparseRegressionEvaluate(data, z, sample, false).value;
}

inline std::vector<double> SparseRegressionGradient(const SparseRegressionData& data,
                                                    const std::vector<double>& z,
                                                    const SubsetSample& sample) {
  return internal::SparseRegressionEvaluate(data, z, sample, true).gradient;
}

// Ridge coefficients on a fixed support, the minimizer of
// ‖y − Xβ‖² + (1/γ)‖β‖² over β supported on {i : zᵢ = 1}.
inline Eigen::VectorXd FitSupport(const SparseRegressionData& data, const std::vector<double>& z) {
  std::vector<Eigen::Index> active;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0.5) active.push_back(static_cast<Eigen::Index>(i));
  }
  const auto a = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd v(data.x.rows(), a);
  for (Eigen::Index q = 0; q < a; ++q) v.col(q) = data.x.col(active[static_cast<std::size_t>(q)]);
  Eigen::MatrixXd m = v.transpose() * v;
  m.diagonal().array() += 1.0 / data.gamma;
  const Eigen::VectorXd coef = m.llt().solve(v.transpose() * data.y);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(data.x.cols());
  for (Eigen::Index q = 0; q < a; ++q) beta(active[static_cast<std::size_t>(q)]) = coef(q);
  return beta;
}

// z ∈ {0,1}ᵖ, Σz = k, objective from the sampled kernel formulation.
class SparseRegressionOracle {
 public:
  explicit SparseRegressionOracle(const SparseRegressionData& data) : data_(&data) { data.Validate(); }

  std::size_t population() const { return data_->rows(); }

  VariableLayout Layout() const {
    VariableLayout layout = VariableLayout::Binary(data_->features());
    layout.AddCardinality(static_cast<double>(data_->k));
    return layout;
  }

  Evaluation Evaluate(const std::vector<double>& x, const SubsetSample& sample) const {
    return internal::SparseRegressionEvaluate(*data_, x, sample, true);
  }

  double Value(const std::vector<double>& x, const SubsetSample& sample) const {
    return internal::SparseRegressionEvaluate(*data_, x, sample, false).value;
  }

  // Indicator of the k columns with the largest |Xᵢᵀy|.
  std::vector<double> WarmStart() const {
    const Eigen::VectorXd score = (data_->x.transpose() * data_->y).cwiseAbs();
    std::vector<std::size_t> order(data_->features());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return score(static_cast<Eigen::Index>(a)) > score(static_cast<Eigen::Index>(b));
    });
    std::vector<double> z(data_->features(), 0.0);
    for (std::size_t i = 0; i < data_->k; ++i) z[order[i]] = 1.0;
    return z;
  }

  double EpigraphLowerBound() const { return 0.0; }

  const SparseRegressionData& data() const { return *data_; }

 private:
  const SparseRegressionData* data_;
};

}  // namespace scpkit::problems
