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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/random.hpp"
#include "scpkit/core/sampling.hpp"
#include "scpkit/problems/sparse_regression.hpp"
#include "scpkit/problems/sskp.hpp"

namespace scpkit::data {

struct SparseRegGenSpec {
  std::size_t n = 1000;
  std::size_t p = 20;
  std::size_t k = 5;
  double sigma = 0.1;
  std::uint64_t seed = 0;
};

struct SparseRegressionInstance {
  problems::SparseRegressionData train;
  problems::SparseRegressionData validation;
  problems::SparseRegressionData test;
  Eigen::VectorXd beta;
  std::vector<std::size_t> support;  // sorted
};

namespace internal {

inline problems::SparseRegressionData DrawSplit(const SparseRegGenSpec& spec,
                                                const Eigen::VectorXd& beta, std::uint64_t seed) {
  Rng rng(seed);
  problems::SparseRegressionData split;
  split.k = spec.k;
  split.x.resize(static_cast<Eigen::Index>(spec.n), static_cast<Eigen::Index>(spec.p));
  for (Eigen::Index i = 0; i < split.x.rows(); ++i) {
    for (Eigen::Index j = 0; j < split.x.cols(); ++j) split.x(i, j) = rng.StandardNormal();
  }
  split.y = split.x * beta;
  for (Eigen::Index i = 0; i < split.y.size(); ++i) split.y(i) += spec.sigma * rng.StandardNormal();
  return split;
}

}  // namespace internal

// y = Xβ + noise with X_ij ~ N(0,1), a uniformly random support of size k,
// β_j ~ N(0,1) on the support and noise ~ N(0, σ²). Train, validation and
// test splits are independent draws of N rows each that share β.
inline SparseRegressionInstance GenerateSparseRegression(const SparseRegGenSpec& spec) {
  Require(spec.k >= 1 && spec.k <= spec.p, ErrorCode::kInvalidArgument, "need 1 <= k <= p");
  Require(spec.n >= 1 && spec.sigma >= 0.0, ErrorCode::kInvalidArgument, "need N >= 1 and sigma >= 0");
  SparseRegressionInstance instance;
  const SubsetSample support = SampleWithoutReplacement(spec.p, spec.k, MixSeed(spec.seed, 0));
  instance.support = support.indices;
  Rng rng(MixSeed(spec.seed, 1));
  instance.beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.p));
  for (std::size_t j : instance.support) instance.beta(static_cast<Eigen::Index>(j)) = rng.StandardNormal();
  instance.train = internal::DrawSplit(spec, instance.beta, MixSeed(spec.seed, 2));
  instance.validation = internal::DrawSplit(spec, instance.beta, MixSeed(spec.seed, 3));
  instance.test = internal::DrawSplit(spec, instance.beta, MixSeed(spec.seed, 4));
  return instance;
}

struct SskpGenSpec {
  std::size_t n = 1000;
  std::size_t k = 10;
  std::uint64_t seed = 0;
  double c = 4.0;
  double q = 0.0;  // 0 selects max(k, 20)
};

struct SskpInstance {
  problems::SskpData data;
  Eigen::VectorXd mu;
  Eigen::VectorXd sigma;
};

// rᵢ ~ U[10,20], μᵢ ~ U[20,30], σᵢ ~ U[5,15], Wᵢʲ ~ N(μᵢ, σᵢ²) i.i.d. over
// scenarios j.
inline SskpInstance GenerateSskp(const SskpGenSpec& spec) {
  Require(spec.n >= 1 && spec.k >= 1, ErrorCode::kInvalidArgument, "need N >= 1 and k >= 1");
  SskpInstance instance;
  const auto k = static_cast<Eigen::Index>(spec.k);
  Rng rng(MixSeed(spec.seed, 0));
  instance.data.r.resize(k);
  instance.mu.resize(k);
  instance.sigma.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    instance.data.r(i) = rng.Uniform(10.0, 20.0);
    instance.mu(i) = rng.Uniform(20.0, 30.0);
    instance.sigma(i) = rng.Uniform(5.0, 15.0);
  }
  instance.data.c = spec.c;
  instance.data.q = spec.q > 0.0 ? spec.q : std::max(static_cast<double>(spec.k), 20.0);
  Rng scenarios(MixSeed(spec.seed, 1));
  instance.data.w.resize(static_cast<Eigen::Index>(spec.n), k);
  for (Eigen::Index j = 0; j < instance.data.w.rows(); ++j) {
    for (Eigen::Index i = 0; i < k; ++i) {
      instance.data.w(j, i) = scenarios.Normal(instance.mu(i), instance.sigma(i));
    }
  }
  return instance;
}

}  // namespace scpkit::data
