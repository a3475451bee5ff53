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
#include <vector>

#include "scpkit/core/error.hpp"

namespace scpkit::qp {

// One linearization ξ ≥ b − aᵀθ.
struct QpCut {
  std::vector<double> a;
  double b = 0.0;
};

// min ½‖θ‖² + C·ξ  s.t.  ξ ≥ bᵢ − aᵢᵀθ for every cut, ξ ≥ 0.
struct QpMaster {
  std::size_t dimension = 0;
  double c = 1.0;
  std::vector<QpCut> cuts;

  void Validate() const {
    Require(c > 0.0 && std::isfinite(c), ErrorCode::kInvalidArgument, "C must be positive");
    for (const QpCut& cut : cuts) {
      Require(cut.a.size() == dimension, ErrorCode::kInvalidArgument, "qp cut dimension mismatch");
      Require(std::isfinite(cut.b), ErrorCode::kInvalidArgument, "qp cut offset is not finite");
      for (double v : cut.a) {
        Require(std::isfinite(v), ErrorCode::kInvalidArgument, "qp cut coefficient is not finite");
      }
    }
  }
};

struct QpOptions {
  std::size_t max_sweeps = 100000;
  double improvement_tolerance = 1e-12;
  double kkt_tolerance = 1e-8;
  bool polish = true;
};

struct QpSolution {
  std::vector<double> theta;
  double xi = 0.0;
  double objective = 0.0;       // primal
  double dual_objective = 0.0;
  std::vector<double> alpha;    // one per cut
  double alpha_zero = 0.0;      // multiplier of ξ ≥ 0
  double kkt_residual = 0.0;
  std::size_t sweeps = 0;
  bool converged = false;
};

// Solves the dual
//   max Σ αᵢbᵢ − ½‖Σ αᵢaᵢ‖²  s.t.  α ≥ 0, Σ αᵢ ≤ C
// by cyclic coordinate ascent. The slack of Σα ≤ C is the multiplier of
// ξ ≥ 0, carried as an explicit zero cut so the feasible set is the simplex
// Σα = C; each coordinate step therefore moves mass between the swept
// coordinate and its best partner, with an exact line search. θ = Σ αᵢaᵢ.
inline QpSolution SolveQp(const QpMaster& master, QpOptions options = {}) {
  master.Validate();
  const std::size_t k = master.cuts.size() + 1;  // index 0: zero cut
  const auto kk = static_cast<Eigen::Index>(k);
  const auto p = static_cast<Eigen::Index>(master.dimension);
  const double c = master.c;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p, kk);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(kk);
  for (std::size_t i = 1; i < k; ++i) {
    const QpCut& cut = master.cuts[i - 1];
    for (Eigen::Index j = 0; j < p; ++j) a(j, static_cast<Eigen::Index>(i)) = cut.a[static_cast<std::size_t>(j)];
    b(static_cast<Eigen::Index>(i)) = cut.b;
  }
  const Eigen::MatrixXd gram = a.transpose() * a;

  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(kk);
  alpha(0) = c;
  // g = b − Gα: the partial derivatives of the dual objective.
  Eigen::VectorXd g = b - gram * alpha;

  auto dual_value = [&](const Eigen::VectorXd& x) {
    return b.dot(x) - 0.5 * x.dot(gram * x);
  };

  QpSolution result;
  double dual = dual_value(alpha);
  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    result.sweeps = sweep + 1;
    double max_improvement = 0.0;
    for (Eigen::Index i = 0; i < kk; ++i) {
      // Best partner j: move mass t from j to i (t < 0 moves i → j).
      Eigen::Index partner = -1;
      double best_gain = 0.0;
      double best_step = 0.0;
      for (Eigen::Index j = 0; j < kk; ++j) {
        if (j == i) continue;
        const double slope = g(i) - g(j);
        const double curvature = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
        const double lo = -alpha(i);
        const double hi = alpha(j);
        double t = 0.0;
        if (curvature > 1e-14 * (1.0 + gram(i, i) + gram(j, j))) {
          t = std::clamp(slope / curvature, lo, hi);
        } else {
          t = slope > 0.0 ? hi : (slope < 0.0 ? lo : 0.0);
        }
        const double gain = slope * t - 0.5 * std::max(curvature, 0.0) * t * t;
        if (gain > best_gain) {
          best_gain = gain;
          best_step = t;
          partner = j;
        }
      }
      if (partner < 0 || best_step == 0.0) continue;
      alpha(i) += best_step;
      alpha(partner) -= best_step;
      if (alpha(partner) < 0.0) alpha(partner) = 0.0;
      if (alpha(i) < 0.0) alpha(i) = 0.0;
      g -= best_step * (gram.col(i) - gram.col(partner));
      max_improvement = std::max(max_improvement, best_gain);
    }
    const double next = dual_value(alpha);
    dual = next;
    if (max_improvement < options.improvement_tolerance * (1.0 + std::abs(dual))) break;
  }
  g = b - gram * alpha;

  // Active-set polish: solve the equality system on a working support (all
  // supported coordinates share one gradient value λ and Σα = C), dropping
  // negative multipliers and adding coordinates whose gradient exceeds λ,
  // until the KKT conditions hold exactly.
  if (options.polish) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < kk; ++i) {
      if (alpha(i) > 1e-12 * c) support.push_back(i);
    }
    for (int round = 0; round < 4 * static_cast<int>(kk) + 4 && !support.empty(); ++round) {
      const auto s = static_cast<Eigen::Index>(support.size());
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
      Eigen::VectorXd rhs(s + 1);
      for (Eigen::Index r = 0; r < s; ++r) {
        for (Eigen::Index q = 0; q < s; ++q) kkt(r, q) = gram(support[r], support[q]);
        kkt(r, s) = 1.0;
        kkt(s, r) = 1.0;
        rhs(r) = b(support[r]);
      }
      rhs(s) = c;
      const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
      if (!sol.allFinite() || (kkt * sol - rhs).norm() > 1e-9 * (1.0 + rhs.norm())) break;
      Eigen::Index most_negative = -1;
      for (Eigen::Index r = 0; r < s; ++r) {
        if (sol(r) < -1e-14 * c && (most_negative < 0 || sol(r) < sol(most_negative))) most_negative = r;
      }
      if (most_negative >= 0) {
        support.erase(support.begin() + most_negative);
        continue;
      }
      Eigen::VectorXd candidate = Eigen::VectorXd::Zero(kk);
      for (Eigen::Index r = 0; r < s; ++r) candidate(support[r]) = std::max(sol(r), 0.0);
      candidate *= c / candidate.sum();
      const Eigen::VectorXd cg = b - gram * candidate;
      double lambda = -std::numeric_limits<double>::infinity();
      for (Eigen::Index i : support) lambda = std::max(lambda, cg(i));
      Eigen::Index violator = -1;
      for (Eigen::Index i = 0; i < kk; ++i) {
        if (cg(i) > lambda + 1e-13 * (1.0 + std::abs(lambda)) && (violator < 0 || cg(i) > cg(violator))) violator = i;
      }
      if (violator >= 0) {
        support.push_back(violator);
        continue;
      }
      const double before = dual_value(alpha);
      if (dual_value(candidate) >= before - 1e-12 * (1.0 + std::abs(before))) {
        alpha = candidate;
        g = cg;
      }
      break;
    }
  }

  const Eigen::VectorXd theta = a * alpha;
  result.theta.assign(theta.data(), theta.data() + theta.size());
  result.xi = std::max(0.0, g.maxCoeff());  // g includes the zero cut, so max ≥ 0
  result.objective = 0.5 * theta.squaredNorm() + c * result.xi;
  result.dual_objective = dual_value(alpha);
  result.alpha_zero = alpha(0);
  result.alpha.assign(alpha.data() + 1, alpha.data() + alpha.size());
  // KKT: every supported coordinate must attain the maximal gradient.
  double residual = 0.0;
  const double top = g.maxCoeff();
  for (Eigen::Index i = 0; i < kk; ++i) {
    if (alpha(i) > 0.0) residual = std::max(residual, (top - g(i)) * alpha(i) / c);
  }
  result.kkt_residual = residual;
  const double scale = 1.0 + std::abs(result.objective);
  result.converged = residual <= options.kkt_tolerance * scale &&
                     result.objective - result.dual_objective <= 1e-7 * scale;
  return result;
}

}  // namespace scpkit::qp
