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

// Randomized property suites over the solver stack. Each suite compares a
// solver path against an independent computation from oracles.hpp (or a
// mathematical inequality) and reports one pass/fail line.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "scpkit/core/engine.hpp"
#include "scpkit/core/random.hpp"
#include "scpkit/core/sampling.hpp"
#include "scpkit/data/generators.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/milp/cut_master.hpp"
#include "scpkit/milp/lp.hpp"
#include "scpkit/problems/sparse_regression.hpp"
#include "scpkit/problems/sskp.hpp"
#include "scpkit/problems/svm.hpp"
#include "scpkit/qp/cut_master.hpp"
#include "scpkit/qp/qp_master.hpp"
#include "scpkit/testing/oracles.hpp"

namespace scpkit::testing {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropertyOptions {
  std::uint64_t seed = 2024;
  // Mutation hook: flips the sign of the SVM subgradient inside the
  // subgradient-inequality suite, which must then fail.
  bool corrupt_subgradient = false;
};

namespace internal {

inline std::string Describe(double worst, double limit) {
  std::ostringstream out;
  out.precision(3);
  out << "worst " << worst << " (limit " << limit << ")";
  return out.str();
}

inline problems::SvmData RandomSvm(std::size_t n, std::size_t p, std::uint64_t seed, double c = 1.0) {
  Rng rng(seed);
  problems::SvmData data;
  data.c = c;
  data.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  data.y.resize(static_cast<Eigen::Index>(n));
  Eigen::VectorXd w(static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = rng.StandardNormal();
  for (Eigen::Index i = 0; i < data.x.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.x.cols(); ++j) data.x(i, j) = rng.StandardNormal();
    data.y(i) = data.x.row(i).dot(w) + 0.5 * rng.StandardNormal() >= 0.0 ? 1.0 : -1.0;
  }
  return data;
}

inline problems::SparseRegressionData RandomSparseRegression(std::size_t n, std::size_t p, std::size_t k,
                                                             std::uint64_t seed, double gamma = 1.0) {
  problems::SparseRegressionData data =
      data::GenerateSparseRegression({n, p, k, 0.5, seed}).train;
  data.gamma = gamma;
  return data;
}

inline std::vector<double> RandomBinaryWithCardinality(std::size_t p, std::size_t k, Rng& rng) {
  const SubsetSample pick = SampleWithoutReplacement(p, k, rng.NextU64());
  std::vector<double> z(p, 0.0);
  for (std::size_t i : pick.indices) z[i] = 1.0;
  return z;
}

inline double Percentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

}  // namespace internal

// Woodbury evaluation against the dense n×n inverse, n ≤ 50.
inline CheckResult CheckWoodbury(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 101));
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng.UniformIndex(46);
    const std::size_t p = 3 + rng.UniformIndex(8);
    const std::size_t k = 1 + rng.UniformIndex(p);
    const double gamma = std::pow(10.0, rng.Uniform(-2.0, 1.0));
    const auto data = internal::RandomSparseRegression(n, p, k, rng.NextU64(), gamma);
    std::vector<double> z = internal::RandomBinaryWithCardinality(p, k, rng);
    if (trial % 2 == 1) {
      for (double& v : z) v = rng.Uniform(0.0, 1.0);
    }
    const SubsetSample sample = trial % 3 == 0 ? SubsetSample::Full(n)
                                               : SampleWithoutReplacement(n, 1 + rng.UniformIndex(n), rng.NextU64());
    const double fast = problems::SparseRegressionValue(data, z, sample);
    const double dense = SparseRegressionByDenseInverse(data, z, sample.indices);
    worst = std::max(worst, std::abs(fast - dense) / std::max(1.0, std::abs(dense)));
  }
  return {"woodbury-equivalence", worst <= 1e-10, internal::Describe(worst, 1e-10)};
}

// Central differences (h = 1e-5) of every analytic gradient at random
// points away from kinks.
inline CheckResult CheckFiniteDifferences(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 102));
  constexpr double kStep = 1e-5;
  constexpr double kTolerance = 1e-5;
  double worst = 0.0;
  auto record = [&](double fd, double g) {
    worst = std::max(worst, std::abs(fd - g) / std::max(1.0, std::abs(g)));
  };

  for (int trial = 0; trial < 10; ++trial) {
    const auto data = internal::RandomSparseRegression(30, 8, 3, rng.NextU64());
    const SubsetSample sample = trial % 2 ? SubsetSample::Full(30) : SampleWithoutReplacement(30, 20, rng.NextU64());
    std::vector<double> z(8);
    for (double& v : z) v = rng.Uniform(0.2, 1.0);
    const std::vector<double> g = problems::SparseRegressionGradient(data, z, sample);
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::vector<double> up = z, down = z;
      up[i] += kStep;
      down[i] -= kStep;
      record((problems::SparseRegressionValue(data, up, sample) -
              problems::SparseRegressionValue(data, down, sample)) / (2.0 * kStep),
             g[i]);
    }
  }

  int sskp_done = 0;
  while (sskp_done < 10) {
    const auto inst = data::GenerateSskp({50, 10, rng.NextU64()});
    std::vector<double> z(10);
    for (double& v : z) v = rng.Uniform(0.0, 1.0);
    const SubsetSample sample = SubsetSample::Full(50);
    const Eigen::Map<const Eigen::VectorXd> zz(z.data(), 10);
    bool near_kink = false;
    for (Eigen::Index j = 0; j < inst.data.w.rows(); ++j) {
      near_kink = near_kink || std::abs(inst.data.w.row(j).dot(zz) - inst.data.q) < 1e-2;
    }
    if (near_kink) continue;
    ++sskp_done;
    const std::vector<double> g = problems::SskpCostGradient(inst.data, z, sample);
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::vector<double> up = z, down = z;
      up[i] += kStep;
      down[i] -= kStep;
      record((problems::SskpCostValue(inst.data, up, sample) -
              problems::SskpCostValue(inst.data, down, sample)) / (2.0 * kStep),
             g[i]);
    }
  }

  int svm_done = 0;
  while (svm_done < 10) {
    const auto data = internal::RandomSvm(40, 5, rng.NextU64());
    std::vector<double> theta(5);
    for (double& v : theta) v = rng.Uniform(-1.0, 1.0);
    const Eigen::Map<const Eigen::VectorXd> t(theta.data(), 5);
    bool near_kink = false;
    for (Eigen::Index i = 0; i < data.x.rows(); ++i) {
      near_kink = near_kink || std::abs(1.0 - data.y(i) * data.x.row(i).dot(t)) < 1e-3;
    }
    if (near_kink) continue;
    ++svm_done;
    const SubsetSample sample = SubsetSample::Full(40);
    const std::vector<double> g = problems::SvmRiskSubgradient(data, theta, sample);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      std::vector<double> up = theta, down = theta;
      up[i] += kStep;
      down[i] -= kStep;
      record((problems::SvmRiskValue(data, up, sample) - problems::SvmRiskValue(data, down, sample)) /
                 (2.0 * kStep),
             g[i]);
    }
  }
  return {"finite-difference-gradients", worst <= kTolerance, internal::Describe(worst, kTolerance)};
}

// R(θ') ≥ R(θ) + gᵀ(θ' − θ) for the SVM risk, 100 probes per instance.
inline CheckResult CheckSubgradientInequality(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 103));
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = internal::RandomSvm(30 + rng.UniformIndex(30), 4, rng.NextU64());
    const SubsetSample sample = SubsetSample::Full(data.rows());
    std::vector<double> theta(4);
    for (double& v : theta) v = rng.Uniform(-2.0, 2.0);
    std::vector<double> g = problems::SvmRiskSubgradient(data, theta, sample);
    if (options.corrupt_subgradient) {
      for (double& v : g) v = -v;
    }
    const double base = problems::SvmRiskValue(data, theta, sample);
    for (int probe = 0; probe < 100; ++probe) {
      std::vector<double> other(4);
      double linear = base;
      for (std::size_t j = 0; j < 4; ++j) {
        other[j] = rng.Uniform(-3.0, 3.0);
        linear += g[j] * (other[j] - theta[j]);
      }
      worst = std::max(worst, linear - problems::SvmRiskValue(data, other, sample));
    }
  }
  return {"subgradient-inequality", worst <= 1e-9, internal::Describe(worst, 1e-9)};
}

// Branch-and-bound against exhaustive enumeration on random mixed-binary
// models with up to 12 binaries; also checks that the recorded global bound
// never decreases.
inline CheckResult CheckMilpEnumeration(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 104));
  double worst = 0.0;
  int mismatched_status = 0;
  int bound_drops = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t binaries = 3 + rng.UniformIndex(10);
    const std::size_t continuous = 1 + rng.UniformIndex(2);
    milp::MilpModel model;
    milp::LpModel& lp = model.lp;
    lp.num_columns = binaries + continuous;
    for (std::size_t j = 0; j < lp.num_columns; ++j) {
      lp.objective.push_back(rng.Uniform(-5.0, 5.0));
      lp.lower.push_back(j < binaries ? 0.0 : -5.0);
      lp.upper.push_back(j < binaries ? 1.0 : 5.0);
      if (j < binaries) model.integer_columns.push_back(j);
    }
    const std::size_t rows = 2 + rng.UniformIndex(5);
    for (std::size_t i = 0; i < rows; ++i) {
      milp::LpRow row;
      double total = 0.0;
      for (std::size_t j = 0; j < lp.num_columns; ++j) {
        row.coefficients.push_back(rng.Uniform(-3.0, 3.0));
        total += std::abs(row.coefficients.back());
      }
      row.sense = rng.Uniform01() < 0.8 ? Sense::kLessEqual : Sense::kGreaterEqual;
      row.rhs = (row.sense == Sense::kLessEqual ? 1.0 : -1.0) * rng.Uniform(0.0, 0.5) * total;
      lp.rows.push_back(std::move(row));
    }
    milp::MilpOptions milp_options;
    milp_options.record_bounds = true;
    const milp::MilpSolution solved = milp::SolveMilp(model, nullptr, {}, milp_options);
    const std::optional<double> reference = MilpByEnumeration(model);
    const bool solved_ok = solved.status == milp::LpStatus::kOptimal;
    if (solved_ok != reference.has_value()) {
      ++mismatched_status;
      continue;
    }
    if (solved_ok) {
      worst = std::max(worst, std::abs(solved.objective - *reference) / (1.0 + std::abs(*reference)));
    }
    for (std::size_t i = 1; i < solved.bound_trace.size(); ++i) {
      bound_drops += solved.bound_trace[i] < solved.bound_trace[i - 1] - 1e-9;
    }
  }
  std::string detail = internal::Describe(worst, 1e-7);
  detail += ", status mismatches " + std::to_string(mismatched_status) + ", bound drops " +
            std::to_string(bound_drops);
  return {"milp-vs-enumeration", worst <= 1e-7 && mismatched_status == 0 && bound_drops == 0, detail};
}

// Cut QP: optimum against active-set enumeration, primal-dual gap and
// complementary slackness.
inline CheckResult CheckQp(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 105));
  double worst_match = 0.0;
  double worst_gap = 0.0;
  double worst_slack = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    qp::QpMaster master;
    master.dimension = 3;
    master.c = trial % 3 == 0 ? 1.0 : 10.0;
    for (int i = 0; i < 5; ++i) {
      qp::QpCut cut;
      for (int j = 0; j < 3; ++j) cut.a.push_back(rng.Uniform(-1.0, 1.0));
      cut.b = rng.Uniform(-0.5, 1.5);
      master.cuts.push_back(std::move(cut));
    }
    const qp::QpSolution solved = qp::SolveQp(master);
    const QpReference reference = QpByActiveSets(master);
    const double scale = 1.0 + std::abs(reference.objective);
    worst_match = std::max(worst_match, std::abs(solved.objective - reference.objective) / scale);
    worst_gap = std::max(worst_gap, (solved.objective - solved.dual_objective) / (1.0 + std::abs(solved.objective)));
    for (std::size_t i = 0; i < master.cuts.size(); ++i) {
      double slack = solved.xi - master.cuts[i].b;
      for (std::size_t j = 0; j < 3; ++j) slack += master.cuts[i].a[j] * solved.theta[j];
      worst_slack = std::max(worst_slack, solved.alpha[i] * slack / (master.c * scale));
    }
  }
  std::ostringstream detail;
  detail.precision(3);
  detail << "objective " << worst_match << ", gap " << worst_gap << ", slackness " << worst_slack;
  return {"qp-kkt-duality", worst_match <= 1e-7 && worst_gap <= 1e-7 && worst_slack <= 1e-6, detail.str()};
}

// Subset deviation |f(·;S) − f(·;[N])| over 500 subsets of size N/10: the 99th
// percentile must stay within 3·range·√(log(100)/(2n)), where range is the
// spread of the per-row losses at the probe point.
inline CheckResult CheckHoeffding(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 106));
  constexpr std::size_t kRows = 2000;
  constexpr std::size_t kSubset = kRows / 10;
  const double width = std::sqrt(std::log(100.0) / (2.0 * kSubset));
  double worst_ratio = 0.0;
  auto run = [&](const std::function<double(const SubsetSample&)>& value, const std::vector<double>& losses) {
    const double full = value(SubsetSample::Full(kRows));
    const auto [lo, hi] = std::minmax_element(losses.begin(), losses.end());
    const double bound = 3.0 * (*hi - *lo) * width;
    std::vector<double> deviations;
    for (int s = 0; s < 500; ++s) {
      deviations.push_back(std::abs(value(SampleWithoutReplacement(kRows, kSubset, rng.NextU64())) - full));
    }
    worst_ratio = std::max(worst_ratio, internal::Percentile(deviations, 0.99) / bound);
  };

  {
    const auto data = internal::RandomSparseRegression(kRows, 10, 3, rng.NextU64(), 0.01);
    const std::vector<double> z = internal::RandomBinaryWithCardinality(10, 3, rng);
    // Per-row contributions yⱼαⱼ of the full-data value, α = (I + γXXᵀ)⁻¹y.
    std::vector<double> losses;
    const Eigen::VectorXd beta = problems::FitSupport(data, z);
    const Eigen::VectorXd alpha = data.y - data.x * beta;
    for (Eigen::Index j = 0; j < alpha.size(); ++j) losses.push_back(data.y(j) * alpha(j));
    run([&](const SubsetSample& s) { return problems::SparseRegressionValue(data, z, s); }, losses);
  }
  {
    const auto data = internal::RandomSvm(kRows, 5, rng.NextU64());
    std::vector<double> theta(5);
    for (double& v : theta) v = rng.Uniform(-1.0, 1.0);
    std::vector<double> losses;
    const Eigen::Map<const Eigen::VectorXd> t(theta.data(), 5);
    for (Eigen::Index i = 0; i < data.x.rows(); ++i) losses.push_back(std::max(0.0, 1.0 - data.y(i) * data.x.row(i).dot(t)));
    run([&](const SubsetSample& s) { return problems::SvmRiskValue(data, theta, s); }, losses);
  }
  {
    const auto inst = data::GenerateSskp({kRows, 10, rng.NextU64()});
    std::vector<double> z(10, 0.0);
    z[0] = z[3] = 1.0;
    std::vector<double> losses;
    const Eigen::Map<const Eigen::VectorXd> zz(z.data(), 10);
    for (Eigen::Index j = 0; j < inst.data.w.rows(); ++j) {
      losses.push_back(inst.data.c * std::max(inst.data.w.row(j).dot(zz) - inst.data.q, 0.0));
    }
    run([&](const SubsetSample& s) { return problems::SskpCostValue(inst.data, z, s); }, losses);
  }
  return {"hoeffding-concentration", worst_ratio <= 1.0,
          internal::Describe(worst_ratio, 1.0) + " as a fraction of the bound"};
}

// Full-mode cuts never exceed f on [N] at random probes inside the bounds.
inline CheckResult CheckCutValidity(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 107));
  double worst = 0.0;
  auto probe_cuts = [&](const auto& oracle, const std::vector<Cut>& cuts, auto&& draw) {
    const SubsetSample full = SubsetSample::Full(oracle.population());
    for (int probe = 0; probe < 200; ++probe) {
      const std::vector<double> x = draw();
      const double f = oracle.Value(x, full);
      for (const Cut& cut : cuts) worst = std::max(worst, (cut.Evaluate(x) - f) / (1.0 + std::abs(f)));
    }
  };
  {
    const auto inst = data::GenerateSskp({300, 8, rng.NextU64()});
    problems::SskpOracle oracle(inst.data);
    milp::MilpCutMaster master;
    RunCuttingPlanes(oracle, oracle.Layout(), EngineConfig{}, master);
    probe_cuts(oracle, master.model().cuts, [&] {
      std::vector<double> z(8);
      for (double& v : z) v = rng.Uniform01() < 0.5 ? 0.0 : 1.0;
      return z;
    });
  }
  {
    const auto data = internal::RandomSparseRegression(200, 10, 3, rng.NextU64(), 0.05);
    problems::SparseRegressionOracle oracle(data);
    milp::MilpCutMaster master;
    RunCuttingPlanes(oracle, oracle.Layout(), EngineConfig{}, master);
    probe_cuts(oracle, master.model().cuts, [&] { return internal::RandomBinaryWithCardinality(10, 3, rng); });
  }
  {
    const auto data = internal::RandomSvm(200, 5, rng.NextU64());
    problems::SvmRiskOracle oracle(data);
    std::vector<Cut> cuts;
    for (int i = 0; i < 20; ++i) {
      Cut cut;
      for (int j = 0; j < 5; ++j) cut.anchor.push_back(rng.Uniform(-2.0, 2.0));
      const Evaluation e = oracle.Evaluate(cut.anchor, SubsetSample::Full(200));
      cut.value = e.value;
      cut.gradient = e.gradient;
      cuts.push_back(std::move(cut));
    }
    probe_cuts(oracle, cuts, [&] {
      std::vector<double> t(5);
      for (double& v : t) v = rng.Uniform(-2.0, 2.0);
      return t;
    });
  }
  return {"full-mode-cut-validity", worst <= 1e-9, internal::Describe(worst, 1e-9)};
}

// Same data, config and seed give bit-identical traces and solutions.
inline CheckResult CheckDeterministicReplay(const PropertyOptions& options = {}) {
  bool identical = true;
  auto same = [](const RunReport& a, const RunReport& b) {
    if (a.solution != b.solution || a.eta != b.eta || a.trace.size() != b.trace.size() ||
        a.full_objective_at_solution != b.full_objective_at_solution || a.status != b.status) {
      return false;
    }
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      const TraceRecord& x = a.trace[i];
      const TraceRecord& y = b.trace[i];
      if (x.iteration != y.iteration || x.sample_seed != y.sample_seed || x.sample_size != y.sample_size ||
          x.eta != y.eta || x.sampled_objective != y.sampled_objective) {
        return false;
      }
    }
    return true;
  };
  EngineConfig config;
  config.mode = Mode::kStochastic;
  config.seed = options.seed;
  {
    const auto inst = data::GenerateSskp({2000, 10, options.seed});
    problems::SskpOracle oracle(inst.data);
    milp::MilpCutMaster m1, m2;
    identical = identical && same(RunCuttingPlanes(oracle, oracle.Layout(), config, m1),
                                  RunCuttingPlanes(oracle, oracle.Layout(), config, m2));
  }
  {
    auto inst = data::GenerateSparseRegression({2000, 20, 4, 0.5, options.seed});
    inst.train.gamma = 0.01;
    problems::SparseRegressionOracle oracle(inst.train);
    milp::MilpCutMaster m1, m2;
    identical = identical && same(RunCuttingPlanes(oracle, oracle.Layout(), config, m1),
                                  RunCuttingPlanes(oracle, oracle.Layout(), config, m2));
  }
  {
    const auto data = internal::RandomSvm(1000, 5, options.seed, 10.0);
    problems::SvmRiskOracle oracle(data);
    qp::QpCutMaster m1(data.c), m2(data.c);
    identical = identical && same(RunCuttingPlanes(oracle, oracle.Layout(), config, m1),
                                  RunCuttingPlanes(oracle, oracle.Layout(), config, m2));
  }
  return {"deterministic-replay", identical, identical ? "traces identical" : "traces differ"};
}

// Full-mode engine invariants: η non-decreasing, f(z*) − η* ≤ ε at
// termination, and termination within 10·|Z| iterations on enumerable
// problems in both modes.
inline CheckResult CheckEngineInvariants(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 108));
  int eta_drops = 0;
  int certificate_failures = 0;
  int unfinished = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = data::GenerateSskp({500, 6, rng.NextU64()});
    problems::SskpOracle oracle(inst.data);
    for (Mode mode : {Mode::kFull, Mode::kStochastic}) {
      EngineConfig config;
      config.mode = mode;
      config.seed = rng.NextU64();
      config.max_iterations = 10 * 64;
      milp::MilpCutMaster master;
      const RunReport report = RunCuttingPlanes(oracle, oracle.Layout(), config, master);
      unfinished += report.status != RunStatus::kOptimal;
      if (mode != Mode::kFull) continue;
      for (std::size_t t = 1; t < report.trace.size(); ++t) {
        eta_drops += report.trace[t].eta < report.trace[t - 1].eta - 1e-9;
      }
      certificate_failures += report.full_objective_at_solution - report.eta > config.epsilon;
    }
  }
  const bool ok = eta_drops == 0 && certificate_failures == 0 && unfinished == 0;
  return {"engine-invariants", ok,
          "eta drops " + std::to_string(eta_drops) + ", certificate failures " +
              std::to_string(certificate_failures) + ", unfinished runs " + std::to_string(unfinished)};
}

// Stochastic cuts on SSKP: the fraction of (cut, probe) pairs where the cut
// exceeds f(·;[N]) by more than 5 standard deviations of the subset mean at
// the probe is at most 1%.
inline CheckResult CheckStochasticCutSlack(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 109));
  const auto inst = data::GenerateSskp({2000, 10, rng.NextU64()});
  problems::SskpOracle oracle(inst.data);
  const std::size_t n = DefaultSampleSize(2000);
  const SubsetSample full = SubsetSample::Full(2000);
  auto random_z = [&] {
    std::vector<double> z(10);
    for (double& v : z) v = rng.Uniform01() < 0.3 ? 1.0 : 0.0;
    return z;
  };
  int violations = 0;
  constexpr int kPairs = 200;
  for (int pair = 0; pair < kPairs; ++pair) {
    Cut cut;
    cut.anchor = random_z();
    const Evaluation e = oracle.Evaluate(cut.anchor, SampleWithoutReplacement(2000, n, rng.NextU64()));
    cut.value = e.value;
    cut.gradient = e.gradient;
    const std::vector<double> probe = random_z();
    std::vector<double> means;
    for (int s = 0; s < 50; ++s) means.push_back(oracle.Value(probe, SampleWithoutReplacement(2000, n, rng.NextU64())));
    const Eigen::Map<const Eigen::VectorXd> m(means.data(), static_cast<Eigen::Index>(means.size()));
    const double sd = std::sqrt((m.array() - m.mean()).square().sum() / static_cast<double>(means.size() - 1));
    violations += cut.Evaluate(probe) - oracle.Value(probe, full) > 5.0 * sd + 1e-12;
  }
  const double fraction = static_cast<double>(violations) / kPairs;
  return {"stochastic-cut-slack", fraction <= 0.01, internal::Describe(fraction, 0.01)};
}

// LP optimum certified by the Lagrangian bound of its row duals.
inline CheckResult CheckLpDuality(const PropertyOptions& options = {}) {
  Rng rng(MixSeed(options.seed, 110));
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    milp::LpModel lp;
    lp.num_columns = 2 + rng.UniformIndex(7);
    for (std::size_t j = 0; j < lp.num_columns; ++j) {
      lp.objective.push_back(rng.Uniform(-3.0, 3.0));
      lp.lower.push_back(rng.Uniform(-4.0, 0.0));
      lp.upper.push_back(rng.Uniform(0.0, 4.0));
    }
    const std::size_t rows = 1 + rng.UniformIndex(12);
    for (std::size_t i = 0; i < rows; ++i) {
      milp::LpRow row;
      for (std::size_t j = 0; j < lp.num_columns; ++j) row.coefficients.push_back(rng.Uniform(-2.0, 2.0));
      row.sense = rng.Uniform01() < 0.5 ? Sense::kLessEqual : Sense::kGreaterEqual;
      row.rhs = (row.sense == Sense::kLessEqual ? 1.0 : -1.0) * rng.Uniform(0.0, 3.0);
      lp.rows.push_back(std::move(row));
    }
    const milp::LpSolution s = milp::SolveLp(lp);
    if (s.status != milp::LpStatus::kOptimal) continue;
    worst = std::max(worst, s.objective - milp::LagrangianBound(lp, s.row_duals));
  }
  return {"lp-weak-duality", worst <= 1e-6, internal::Describe(worst, 1e-6)};
}

inline std::vector<CheckResult> RunPropertySuites(const PropertyOptions& options = {}) {
  return {CheckWoodbury(options),          CheckFiniteDifferences(options),
          CheckSubgradientInequality(options), CheckMilpEnumeration(options),
          CheckQp(options),                CheckLpDuality(options),
          CheckHoeffding(options),         CheckCutValidity(options),
          CheckStochasticCutSlack(options), CheckEngineInvariants(options),
          CheckDeterministicReplay(options)};
}

}  // namespace scpkit::testing
