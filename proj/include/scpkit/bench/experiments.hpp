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
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scpkit/bench/thread_pool.hpp"
#include "scpkit/core/engine.hpp"
#include "scpkit/core/sampling.hpp"
#include "scpkit/core/types.hpp"
#include "scpkit/data/covertype.hpp"
#include "scpkit/data/generators.hpp"
#include "scpkit/data/metrics.hpp"
#include "scpkit/data/results_csv.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/milp/cut_master.hpp"
#include "scpkit/problems/sparse_regression.hpp"
#include "scpkit/problems/sskp.hpp"
#include "scpkit/problems/svm.hpp"
#include "scpkit/qp/cut_master.hpp"
#include "scpkit/testing/oracles.hpp"

namespace scpkit::bench {

// Outcome of one solver run on one instance.
struct ModeOutcome {
  std::string mode;
  std::size_t subset_size = 0;
  RunReport report;
  std::vector<double> solution;
  std::string fingerprint;
  double objective = 0.0;  // on the full data, in the problem's natural sense
  double metric = 0.0;
  double master_seconds = 0.0;
  double oracle_seconds = 0.0;
  double total_seconds = 0.0;
  std::string status;
};

inline std::uint64_t ScpSeed(std::uint64_t instance_seed) { return MixSeed(instance_seed, 99); }

inline EngineConfig MakeConfig(Mode mode, double epsilon, std::uint64_t instance_seed,
                               SampleSizeRule rule = DefaultSampleSize) {
  EngineConfig config;
  config.mode = mode;
  config.epsilon = epsilon;
  config.seed = ScpSeed(instance_seed);
  config.sample_size = std::move(rule);
  return config;
}

namespace internal {

inline void FillTimes(ModeOutcome& out) {
  for (const TraceRecord& r : out.report.trace) {
    out.master_seconds += r.master_seconds;
    out.oracle_seconds += r.oracle_seconds;
  }
  out.total_seconds = out.report.wall_seconds;
  out.status = std::string(ToString(out.report.status));
  out.solution = out.report.solution;
}

inline std::size_t SubsetSize(const EngineConfig& config, std::size_t population) {
  return config.mode == Mode::kFull ? population : config.sample_size(population);
}

inline double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double StandardError(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

inline std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace internal

inline data::ResultRow MakeRow(const std::string& experiment, const std::string& family, std::size_t population,
                               std::size_t size, double sigma, std::uint64_t seed, const ModeOutcome& out,
                               const std::string& metric_name) {
  data::ResultRow row;
  row.experiment = experiment;
  row.family = family;
  row.population = population;
  row.size = size;
  row.sigma = sigma;
  row.mode = out.mode;
  row.subset_size = out.subset_size;
  row.seed = seed;
  row.master_seconds = out.master_seconds;
  row.oracle_seconds = out.oracle_seconds;
  row.total_seconds = out.total_seconds;
  row.iterations = out.report.iterations;
  row.objective = out.objective;
  row.metric_name = metric_name;
  row.metric = out.metric;
  row.fingerprint = out.fingerprint;
  row.status = out.status;
  return row;
}

// ---------------------------------------------------------------------------
// Sparse regression

struct SparseRegCell {
  std::size_t n = 1000;
  std::size_t p = 100;
  std::size_t k = 10;
  double sigma = 0.1;
};

// γ candidates, in units of 1 / (mean squared column norm of X).
inline const std::vector<double>& GammaGrid() {
  static const std::vector<double> grid{0.01, 0.1, 1.0, 10.0};
  return grid;
}

inline double GammaScale(const problems::SparseRegressionData& data) {
  return data.x.squaredNorm() / static_cast<double>(data.x.cols());
}

// Solves on the training split with the given γ; the metric is the test-set
// MAPE of the ridge refit on the selected support.
inline ModeOutcome SolveSparseRegression(data::SparseRegressionInstance& instance, double gamma,
                                         const EngineConfig& config) {
  instance.train.gamma = gamma;
  problems::SparseRegressionOracle oracle(instance.train);
  milp::MilpCutMaster master;
  ModeOutcome out;
  out.mode = std::string(ToString(config.mode));
  out.subset_size = internal::SubsetSize(config, instance.train.rows());
  out.report = RunCuttingPlanes(oracle, oracle.Layout(), config, master);
  internal::FillTimes(out);
  out.objective = out.report.full_objective_at_solution;
  const std::vector<std::size_t> support = data::SelectedIndices(out.solution, instance.train.features());
  out.fingerprint = data::Fingerprint(support);
  const Eigen::VectorXd beta = problems::FitSupport(instance.train, out.solution);
  out.metric = data::Mape(instance.test.x * beta, instance.test.y);
  return out;
}

// Picks γ from the grid by validation MSE of the full cutting-plane solution.
inline double SelectGamma(data::SparseRegressionInstance& instance, double epsilon, std::uint64_t seed) {
  const double scale = GammaScale(instance.train);
  double best_gamma = GammaGrid().back() / scale;
  double best_mse = std::numeric_limits<double>::infinity();
  for (double g : GammaGrid()) {
    const double gamma = g / scale;
    const ModeOutcome out = SolveSparseRegression(instance, gamma, MakeConfig(Mode::kFull, epsilon, seed));
    const Eigen::VectorXd beta = problems::FitSupport(instance.train, out.solution);
    const double mse = (instance.validation.x * beta - instance.validation.y).squaredNorm() /
                       static_cast<double>(instance.validation.rows());
    if (mse < best_mse) {
      best_mse = mse;
      best_gamma = gamma;
    }
  }
  return best_gamma;
}

struct SparseRegRep {
  double gamma = 0.0;
  ModeOutcome full;
  ModeOutcome scp;
  bool agree = false;
};

struct SparseRegSettings {
  double epsilon = 1e-4;
  bool select_gamma = true;
  double fixed_gamma_multiplier = 10.0;  // used when select_gamma is false
};

inline SparseRegRep RunSparseRegressionRep(const SparseRegCell& cell, std::uint64_t seed,
                                           const SparseRegSettings& settings = {}) {
  data::SparseRegressionInstance instance =
      data::GenerateSparseRegression({cell.n, cell.p, cell.k, cell.sigma, seed});
  SparseRegRep rep;
  rep.gamma = settings.select_gamma ? SelectGamma(instance, settings.epsilon, seed)
                                    : settings.fixed_gamma_multiplier / GammaScale(instance.train);
  rep.full = SolveSparseRegression(instance, rep.gamma, MakeConfig(Mode::kFull, settings.epsilon, seed));
  rep.scp = SolveSparseRegression(instance, rep.gamma, MakeConfig(Mode::kStochastic, settings.epsilon, seed));
  rep.agree = rep.full.fingerprint == rep.scp.fingerprint;
  return rep;
}

// ---------------------------------------------------------------------------
// Stochastic knapsack

struct SskpCell {
  std::size_t n = 1000;
  std::size_t k = 10;
};

struct SskpSettings {
  double epsilon = 1e-4;
  std::size_t enumeration_max_k = 12;
  bool reformulation = true;
  std::size_t reformulation_max_n = 1000;
  std::size_t reformulation_node_limit = 20000;
  std::size_t reformulation_reps = 1;  // replicates per cell that also run the reformulation
};

struct SskpRep {
  double optimum = 0.0;  // maximized objective on all N scenarios
  std::string reference;
  ModeOutcome full;
  ModeOutcome scp;
  std::optional<ModeOutcome> reformulation;
};

inline ModeOutcome SolveSskp(const problems::SskpData& data, const EngineConfig& config) {
  problems::SskpOracle oracle(data);
  milp::MilpCutMaster master;
  ModeOutcome out;
  out.mode = std::string(ToString(config.mode));
  out.subset_size = internal::SubsetSize(config, data.scenarios());
  out.report = RunCuttingPlanes(oracle, oracle.Layout(), config, master);
  internal::FillTimes(out);
  out.objective = -out.report.full_objective_at_solution;
  out.fingerprint = data::Fingerprint(data::SelectedIndices(out.solution, data.items()));
  return out;
}

inline ModeOutcome SolveSskpReformulation(const problems::SskpData& data, std::size_t node_limit) {
  ModeOutcome out;
  out.mode = "reformulation";
  out.subset_size = data.scenarios();
  const auto start = std::chrono::steady_clock::now();
  milp::MilpOptions options;
  options.node_limit = node_limit;
  try {
    const milp::MilpSolution solution = milp::SolveMilp(problems::SskpLinearReformulation(data), nullptr, {}, options);
    out.status = std::string(milp::ToString(solution.status));
    if (solution.status == milp::LpStatus::kOptimal) {
      out.objective = -solution.objective;
      out.solution.assign(solution.point.begin(), solution.point.begin() + static_cast<std::ptrdiff_t>(data.items()));
      out.fingerprint = data::Fingerprint(data::SelectedIndices(out.solution, data.items()));
    }
    out.report.iterations = solution.nodes;
  } catch (const Error& e) {
    out.status = std::string(ToString(e.code()));
  }
  out.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.master_seconds = out.total_seconds;
  return out;
}

inline SskpRep RunSskpRep(const SskpCell& cell, std::uint64_t seed, const SskpSettings& settings = {},
                          SampleSizeRule rule = DefaultSampleSize) {
  const data::SskpInstance instance = data::GenerateSskp({cell.n, cell.k, seed});
  SskpRep rep;
  rep.full = SolveSskp(instance.data, MakeConfig(Mode::kFull, settings.epsilon, seed));
  rep.scp = SolveSskp(instance.data, MakeConfig(Mode::kStochastic, settings.epsilon, seed, std::move(rule)));
  if (cell.k <= settings.enumeration_max_k) {
    rep.optimum = testing::SskpByEnumeration(instance.data).objective;
    rep.reference = "enumeration";
  } else {
    rep.optimum = rep.full.objective;
    rep.reference = "full-cp";
  }
  if (settings.reformulation && cell.n <= settings.reformulation_max_n) {
    rep.reformulation = SolveSskpReformulation(instance.data, settings.reformulation_node_limit);
  }
  for (ModeOutcome* out : {&rep.full, &rep.scp}) out->metric = 100.0 * out->objective / rep.optimum;
  if (rep.reformulation) rep.reformulation->metric = 100.0 * rep.reformulation->objective / rep.optimum;
  return rep;
}

// ---------------------------------------------------------------------------
// Support vector machine

inline ModeOutcome SolveSvm(const problems::SvmData& train, const problems::SvmData& test,
                            const EngineConfig& config) {
  problems::SvmRiskOracle oracle(train);
  qp::QpCutMaster master(train.c);
  ModeOutcome out;
  out.mode = std::string(ToString(config.mode));
  out.subset_size = internal::SubsetSize(config, train.rows());
  out.report = RunCuttingPlanes(oracle, oracle.Layout(), config, master);
  internal::FillTimes(out);
  const Eigen::Map<const Eigen::VectorXd> theta(out.solution.data(), static_cast<Eigen::Index>(out.solution.size()));
  out.objective = 0.5 * theta.squaredNorm() + train.c * out.report.full_objective_at_solution;
  out.metric = problems::SvmAccuracy(test, out.solution);
  if (master.unconverged_solves() > 0) out.status += "+qp-unconverged";
  return out;
}

// ---------------------------------------------------------------------------
// Experiment drivers

struct ExperimentOptions {
  std::uint64_t seed = 1;
  std::size_t reps = 0;  // 0: the experiment's default
  double epsilon = 1e-4;
  bool full = false;
  std::string covertype;
  std::string family = "sparsereg";  // sweep only
};

struct ExperimentOutput {
  std::vector<data::ResultRow> rows;
  std::size_t failures = 0;
};

namespace internal {

inline data::ResultRow FailureRow(const std::string& experiment, const std::string& family, std::size_t population,
                                  std::size_t size, double sigma, std::uint64_t seed, const std::string& what) {
  data::ResultRow row;
  row.experiment = experiment;
  row.family = family;
  row.population = population;
  row.size = size;
  row.sigma = sigma;
  row.mode = "error";
  row.seed = seed;
  row.status = what;
  return row;
}

}  // namespace internal

inline std::vector<SparseRegCell> Table1Grid(bool full) {
  std::vector<SparseRegCell> grid;
  auto add = [&](SparseRegCell c) {
    for (const SparseRegCell& g : grid) {
      if (g.n == c.n && g.p == c.p && g.k == c.k && g.sigma == c.sigma) return;
    }
    grid.push_back(c);
  };
  if (full) {
    for (std::size_t n : {1000, 10000, 100000, 1000000}) add({n, 100, 10, 0.1});
    for (std::size_t p : {100, 1000, 10000}) add({100000, p, 10, 0.1});
    for (std::size_t k : {10, 20, 50}) add({100000, 100, k, 0.1});
    for (double s : {0.1, 0.2, 0.3}) add({100000, 100, 10, s});
  } else {
    for (std::size_t n : {1000, 10000, 100000}) add({n, 100, 10, 0.1});
    for (std::size_t p : {25, 50, 100}) add({10000, p, 10, 0.1});
    for (std::size_t k : {5, 10, 20}) add({10000, 100, k, 0.1});
    for (double s : {0.1, 0.2, 0.3}) add({10000, 100, 10, s});
  }
  return grid;
}

inline ExperimentOutput RunTable1(const ExperimentOptions& options, std::ostream& summary) {
  const std::vector<SparseRegCell> grid = Table1Grid(options.full);
  const std::size_t reps = options.reps > 0 ? options.reps : 3;
  std::vector<std::optional<SparseRegRep>> results(grid.size() * reps);
  std::vector<std::string> errors(results.size());
  SparseRegSettings settings;
  settings.epsilon = options.epsilon;
  ParallelFor(results.size(), [&](std::size_t task) {
    const SparseRegCell& cell = grid[task / reps];
    try {
      results[task] = RunSparseRegressionRep(cell, options.seed + task % reps, settings);
    } catch (const Error& e) {
      errors[task] = e.what();
    }
  });
  ExperimentOutput output;
  summary << "      N     p    k  sigma |  CP T(s)  CP MAPE | SCP T(s) SCP MAPE | agree\n";
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const SparseRegCell& cell = grid[c];
    std::vector<double> cp_t, cp_m, scp_t, scp_m, agree;
    for (std::size_t r = 0; r < reps; ++r) {
      const std::size_t task = c * reps + r;
      const std::uint64_t seed = options.seed + r;
      if (!results[task]) {
        ++output.failures;
        output.rows.push_back(internal::FailureRow("table1", "sparsereg", cell.n, cell.p, cell.sigma, seed, errors[task]));
        continue;
      }
      const SparseRegRep& rep = *results[task];
      output.rows.push_back(MakeRow("table1", "sparsereg", cell.n, cell.p, cell.sigma, seed, rep.full, "mape"));
      output.rows.push_back(MakeRow("table1", "sparsereg", cell.n, cell.p, cell.sigma, seed, rep.scp, "mape"));
      cp_t.push_back(rep.full.total_seconds);
      cp_m.push_back(rep.full.metric);
      scp_t.push_back(rep.scp.total_seconds);
      scp_m.push_back(rep.scp.metric);
      agree.push_back(rep.agree ? 1.0 : 0.0);
    }
    char line[200];
    std::snprintf(line, sizeof(line), "%7zu %5zu %4zu %6.2f | %8.3f %7.2f%% | %8.3f %7.2f%% | %zu/%zu\n", cell.n,
                  cell.p, cell.k, cell.sigma, internal::Mean(cp_t), 100.0 * internal::Mean(cp_m),
                  internal::Mean(scp_t), 100.0 * internal::Mean(scp_m),
                  static_cast<std::size_t>(std::lround(internal::Mean(agree) * static_cast<double>(agree.size()))),
                  agree.size());
    summary << line;
  }
  return output;
}

inline std::vector<SskpCell> Table3Grid(bool full) {
  std::vector<SskpCell> grid;
  const std::vector<std::size_t> ns = full ? std::vector<std::size_t>{1000, 10000, 100000, 1000000}
                                           : std::vector<std::size_t>{1000, 10000, 100000};
  const std::vector<std::size_t> ks = full ? std::vector<std::size_t>{10, 20, 50}
                                           : std::vector<std::size_t>{10, 20};
  for (std::size_t k : ks) {
    for (std::size_t n : ns) grid.push_back({n, k});
  }
  return grid;
}

inline ExperimentOutput RunTable3(const ExperimentOptions& options, std::ostream& summary) {
  const std::vector<SskpCell> grid = Table3Grid(options.full);
  const std::size_t reps = options.reps > 0 ? options.reps : 20;
  std::vector<std::optional<SskpRep>> results(grid.size() * reps);
  std::vector<std::string> errors(results.size());
  SskpSettings settings;
  settings.epsilon = options.epsilon;
  if (options.full) settings.reformulation_reps = reps;
  ParallelFor(results.size(), [&](std::size_t task) {
    SskpSettings local = settings;
    local.reformulation = task % reps < settings.reformulation_reps;
    try {
      results[task] = RunSskpRep(grid[task / reps], options.seed + task % reps, local);
    } catch (const Error& e) {
      errors[task] = e.what();
    }
  });
  ExperimentOutput output;
  summary << "      N    k |  CP T(s)   CP Obj | SCP T(s)  SCP Obj |  LR T(s)   LR Obj | reference\n";
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const SskpCell& cell = grid[c];
    std::vector<double> cp_t, scp_t, lr_t;
    double opt_sum = 0.0, cp_sum = 0.0, scp_sum = 0.0, lr_sum = 0.0, lr_opt_sum = 0.0;
    std::string reference;
    for (std::size_t r = 0; r < reps; ++r) {
      const std::size_t task = c * reps + r;
      const std::uint64_t seed = options.seed + r;
      if (!results[task]) {
        ++output.failures;
        output.rows.push_back(internal::FailureRow("table3", "sskp", cell.n, cell.k, 0.0, seed, errors[task]));
        continue;
      }
      const SskpRep& rep = *results[task];
      reference = rep.reference;
      output.rows.push_back(MakeRow("table3", "sskp", cell.n, cell.k, 0.0, seed, rep.full, "normalized_objective"));
      output.rows.push_back(MakeRow("table3", "sskp", cell.n, cell.k, 0.0, seed, rep.scp, "normalized_objective"));
      opt_sum += rep.optimum;
      cp_sum += rep.full.objective;
      scp_sum += rep.scp.objective;
      cp_t.push_back(rep.full.total_seconds);
      scp_t.push_back(rep.scp.total_seconds);
      if (rep.reformulation) {
        output.rows.push_back(
            MakeRow("table3", "sskp", cell.n, cell.k, 0.0, seed, *rep.reformulation, "normalized_objective"));
        if (rep.reformulation->status == "optimal") {
          lr_sum += rep.reformulation->objective;
          lr_opt_sum += rep.optimum;
          lr_t.push_back(rep.reformulation->total_seconds);
        } else if (rep.reformulation->status != "resource-exhausted") {
          ++output.failures;
        }
      }
    }
    auto pct = [](double num, double den) { return den != 0.0 ? internal::Fixed(100.0 * num / den, 2) + "%" : "n/a"; };
    char line[200];
    std::snprintf(line, sizeof(line), "%7zu %4zu | %8.3f %8s | %8.3f %8s | %8s %8s | %s\n", cell.n, cell.k,
                  internal::Mean(cp_t), pct(cp_sum, opt_sum).c_str(), internal::Mean(scp_t),
                  pct(scp_sum, opt_sum).c_str(), lr_t.empty() ? "-" : internal::Fixed(internal::Mean(lr_t), 3).c_str(),
                  lr_t.empty() ? "-" : pct(lr_sum, lr_opt_sum).c_str(), reference.c_str());
    summary << line;
  }
  return output;
}

inline ExperimentOutput RunTable2(const ExperimentOptions& options, std::ostream& summary) {
  Require(!options.covertype.empty(), ErrorCode::kInvalidArgument, "table2 needs --covertype <path>");
  const data::CovertypeTable table = data::ReadCovertype(options.covertype);
  if (const std::string warning = table.RowCountWarning(); !warning.empty()) summary << "warning: " << warning << "\n";
  const std::vector<std::size_t> ns = options.full ? std::vector<std::size_t>{1000, 10000, 100000}
                                                   : std::vector<std::size_t>{1000, 10000};
  const std::size_t reps = options.reps > 0 ? options.reps : 3;
  constexpr double kC = 1e6;
  struct SvmRep {
    ModeOutcome full;
    ModeOutcome scp;
  };
  std::vector<std::optional<SvmRep>> results(ns.size() * reps);
  std::vector<std::string> errors(results.size());
  ParallelFor(results.size(), [&](std::size_t task) {
    const std::uint64_t seed = options.seed + task % reps;
    try {
      const data::CovertypeSplit split = data::SplitCovertype(table, ns[task / reps], seed, kC);
      SvmRep rep;
      rep.full = SolveSvm(split.train, split.test, MakeConfig(Mode::kFull, options.epsilon, seed));
      rep.scp = SolveSvm(split.train, split.test, MakeConfig(Mode::kStochastic, options.epsilon, seed));
      results[task] = std::move(rep);
    } catch (const Error& e) {
      errors[task] = e.what();
    }
  });
  ExperimentOutput output;
  summary << "      N   p |  CP T(s)   CP ACC | SCP T(s)  SCP ACC\n";
  for (std::size_t c = 0; c < ns.size(); ++c) {
    std::vector<double> cp_t, cp_a, scp_t, scp_a;
    for (std::size_t r = 0; r < reps; ++r) {
      const std::size_t task = c * reps + r;
      const std::uint64_t seed = options.seed + r;
      if (!results[task]) {
        ++output.failures;
        output.rows.push_back(internal::FailureRow("table2", "svm", ns[c], data::kCovertypeFeatures, 0.0, seed, errors[task]));
        continue;
      }
      output.rows.push_back(MakeRow("table2", "svm", ns[c], data::kCovertypeFeatures, 0.0, seed, results[task]->full, "accuracy"));
      output.rows.push_back(MakeRow("table2", "svm", ns[c], data::kCovertypeFeatures, 0.0, seed, results[task]->scp, "accuracy"));
      cp_t.push_back(results[task]->full.total_seconds);
      cp_a.push_back(results[task]->full.metric);
      scp_t.push_back(results[task]->scp.total_seconds);
      scp_a.push_back(results[task]->scp.metric);
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%7zu %3zu | %8.3f %7.2f%% | %8.3f %7.2f%%\n", ns[c], data::kCovertypeFeatures,
                  internal::Mean(cp_t), 100.0 * internal::Mean(cp_a), internal::Mean(scp_t),
                  100.0 * internal::Mean(scp_a));
    summary << line;
  }
  return output;
}

struct SweepCell {
  std::size_t population = 0;
  std::size_t subset = 0;
  double value = 0.0;  // agreement or normalized objective, percent
  double standard_error = 0.0;
  std::size_t runs = 0;
};

struct SweepGrid {
  std::vector<std::size_t> populations;
  std::vector<std::size_t> subsets;
};

inline SweepGrid DefaultSweepGrid(const std::string& family, bool full) {
  if (family == "sparsereg") {
    return full ? SweepGrid{{1000, 10000, 100000}, {30, 50, 100, 300, 1000, 3000}}
                : SweepGrid{{1000, 10000}, {30, 50, 100, 300, 1000}};
  }
  return full ? SweepGrid{{1000, 10000, 100000}, {10, 30, 100, 300, 1000, 3000}}
              : SweepGrid{{1000, 10000}, {10, 30, 100, 300, 1000}};
}

// Agreement (sparse regression: SCP support equals the full-data support) or
// normalized objective (knapsack: Σ SCP objective / Σ optimum) for every
// (N, n) pair with n ≤ N. The sparse-regression instances are p = 50, k = 5,
// σ = 0.1 and the knapsack instances k = 20 (k = 50 with `full`).
inline ExperimentOutput RunSweep(const ExperimentOptions& options, std::ostream& summary,
                                 std::vector<SweepCell>* cells_out = nullptr,
                                 std::optional<SweepGrid> grid_override = std::nullopt) {
  const std::string& family = options.family;
  Require(family == "sparsereg" || family == "sskp", ErrorCode::kInvalidArgument,
          "sweep family must be sparsereg or sskp");
  const SweepGrid grid = grid_override.value_or(DefaultSweepGrid(family, options.full));
  const std::size_t reps = options.reps > 0 ? options.reps : (family == "sparsereg" ? 10 : 20);
  const std::size_t sskp_k = options.full ? 50 : 20;
  struct Task {
    std::size_t population;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t population : grid.populations) {
    for (std::size_t r = 0; r < reps; ++r) tasks.push_back({population, options.seed + r});
  }
  // Per task: the reference outcome followed by one outcome per admissible n.
  struct TaskResult {
    double reference = 0.0;
    ModeOutcome full;
    std::vector<ModeOutcome> scp;
  };
  std::vector<std::optional<TaskResult>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  ParallelFor(tasks.size(), [&](std::size_t t) {
    const Task& task = tasks[t];
    try {
      TaskResult result;
      if (family == "sparsereg") {
        data::SparseRegressionInstance instance = data::GenerateSparseRegression({task.population, 50, 5, 0.1, task.seed});
        const double gamma = SelectGamma(instance, options.epsilon, task.seed);
        result.full = SolveSparseRegression(instance, gamma, MakeConfig(Mode::kFull, options.epsilon, task.seed));
        for (std::size_t n : grid.subsets) {
          if (n > task.population) continue;
          result.scp.push_back(SolveSparseRegression(
              instance, gamma, MakeConfig(Mode::kStochastic, options.epsilon, task.seed, FixedSampleSize(n))));
        }
      } else {
        const data::SskpInstance instance = data::GenerateSskp({task.population, sskp_k, task.seed});
        result.full = SolveSskp(instance.data, MakeConfig(Mode::kFull, options.epsilon, task.seed));
        result.reference = result.full.objective;
        for (std::size_t n : grid.subsets) {
          if (n > task.population) continue;
          result.scp.push_back(
              SolveSskp(instance.data, MakeConfig(Mode::kStochastic, options.epsilon, task.seed, FixedSampleSize(n))));
        }
      }
      results[t] = std::move(result);
    } catch (const Error& e) {
      errors[t] = e.what();
    }
  });

  ExperimentOutput output;
  const std::size_t size = family == "sparsereg" ? 50 : sskp_k;
  const double sigma = family == "sparsereg" ? 0.1 : 0.0;
  const std::string metric_name = family == "sparsereg" ? "agreement" : "normalized_objective";
  std::vector<SweepCell> cells;
  summary << "      N      n | " << (family == "sparsereg" ? "agreement" : "objective") << "     s.e. | runs\n";
  for (std::size_t population : grid.populations) {
    std::size_t column = 0;
    for (std::size_t n : grid.subsets) {
      if (n > population) continue;
      std::vector<double> values;
      double reference_sum = 0.0;
      double scp_sum = 0.0;
      std::vector<double> gaps;
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (tasks[t].population != population) continue;
        if (!results[t]) {
          if (column == 0) {
            ++output.failures;
            output.rows.push_back(internal::FailureRow("sweep", family, population, size, sigma, tasks[t].seed, errors[t]));
          }
          continue;
        }
        const TaskResult& result = *results[t];
        ModeOutcome scp = result.scp[column];
        if (column == 0) {
          ModeOutcome full = result.full;
          full.metric = family == "sparsereg" ? 1.0 : 1.0;
          output.rows.push_back(MakeRow("sweep", family, population, size, sigma, tasks[t].seed, full, metric_name));
        }
        if (family == "sparsereg") {
          scp.metric = scp.fingerprint == result.full.fingerprint ? 1.0 : 0.0;
          values.push_back(scp.metric);
        } else {
          scp.metric = result.reference != 0.0 ? scp.objective / result.reference : 1.0;
          reference_sum += result.reference;
          scp_sum += scp.objective;
          gaps.push_back(scp.objective - result.reference);
        }
        output.rows.push_back(MakeRow("sweep", family, population, size, sigma, tasks[t].seed, scp, metric_name));
      }
      SweepCell cell;
      cell.population = population;
      cell.subset = n;
      if (family == "sparsereg") {
        cell.runs = values.size();
        cell.value = 100.0 * internal::Mean(values);
        cell.standard_error = 100.0 * internal::StandardError(values);
      } else {
        cell.runs = gaps.size();
        const double mean_reference = cell.runs > 0 ? reference_sum / static_cast<double>(cell.runs) : 0.0;
        cell.value = reference_sum != 0.0 ? 100.0 * scp_sum / reference_sum : 100.0;
        cell.standard_error = mean_reference != 0.0 ? 100.0 * internal::StandardError(gaps) / std::abs(mean_reference) : 0.0;
      }
      cells.push_back(cell);
      char line[120];
      std::snprintf(line, sizeof(line), "%7zu %6zu | %8.2f%% %7.2f | %zu\n", population, n, cell.value,
                    cell.standard_error, cell.runs);
      summary << line;
      ++column;
    }
  }
  if (cells_out != nullptr) *cells_out = std::move(cells);
  return output;
}

}  // namespace scpkit::bench
