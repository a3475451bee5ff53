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

#include "scpkit/milp/master_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "scpkit/core/random.hpp"
#include "scpkit/data/generators.hpp"
#include "scpkit/milp/branch_and_bound.hpp"
#include "scpkit/milp/cut_master.hpp"
#include "scpkit/problems/sparse_regression.hpp"
#include "scpkit/problems/sskp.hpp"
#include "scpkit/testing/oracles.hpp"

namespace scpkit::milp {
namespace {

Cut MakeCut(std::vector<double> anchor, double value, std::vector<double> gradient) {
  Cut cut;
  cut.anchor = std::move(anchor);
  cut.value = value;
  cut.gradient = std::move(gradient);
  return cut;
}

double CutModelValue(const MasterModel& model, const std::vector<double>& z) {
  double eta = model.eta_lower;
  for (const Cut& cut : model.cuts) eta = std::max(eta, cut.Evaluate(z));
  return eta;
}

TEST(MasterModelTest, SparseRegressionOneCutMatchesSupportEnumeration) {
  const data::SparseRegressionInstance instance = data::GenerateSparseRegression({60, 6, 2, 0.1, 11});
  problems::SparseRegressionData train = instance.train;
  train.gamma = 1.0;
  const problems::SparseRegressionOracle oracle(train);
  const std::vector<double> warm = oracle.WarmStart();
  const Evaluation eval = oracle.Evaluate(warm, SubsetSample::Full(train.rows()));

  MilpCutMaster master;
  master.Reset(oracle.Layout(), 0.0, eval.value + 1.0);
  master.AddCut(MakeCut(warm, eval.value, eval.gradient));
  const MasterResult result = master.Solve();
  ASSERT_TRUE(result.feasible);

  double best = std::numeric_limits<double>::infinity();
  testing::ForEachCombination(6, 2, [&](const std::vector<std::size_t>& chosen) {
    std::vector<double> z(6, 0.0);
    for (std::size_t i : chosen) z[i] = 1.0;
    best = std::min(best, CutModelValue(master.model(), z));
  });
  EXPECT_NEAR(result.eta, best, 1e-9);
  double sum = 0.0;
  for (double v : result.point) sum += v;
  EXPECT_NEAR(sum, 2.0, 1e-9);
}

TEST(MasterModelTest, SskpThreeCutsMatchBinaryEnumeration) {
  const data::SskpInstance instance = data::GenerateSskp({200, 10, 4});
  const problems::SskpOracle oracle(instance.data);
  const SubsetSample full = SubsetSample::Full(200);
  MilpCutMaster master;
  master.Reset(oracle.Layout(), oracle.EpigraphLowerBound(), 1.0);
  Rng rng(99);
  for (int c = 0; c < 3; ++c) {
    std::vector<double> z(10);
    for (double& v : z) v = rng.Uniform01() < 0.5 ? 1.0 : 0.0;
    const Evaluation eval = oracle.Evaluate(z, full);
    Cut cut = MakeCut(z, eval.value, eval.gradient);
    master.RaiseEtaUpperBound(cut.Evaluate(oracle.WarmStart()) + 1.0);
    master.AddCut(cut);
  }
  const MasterResult result = master.Solve();
  ASSERT_TRUE(result.feasible);
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < 1024; ++mask) {
    std::vector<double> z(10);
    for (int i = 0; i < 10; ++i) z[i] = (mask >> i) & 1u;
    best = std::min(best, CutModelValue(master.model(), z));
  }
  EXPECT_NEAR(result.eta, best, 1e-9 * (1.0 + std::abs(best)));
}

TEST(MasterModelTest, ContradictoryBoundIsInfeasible) {
  MasterModel model{VariableLayout::Binary(1), {}, 0.0, 0.0};
  AppendCut(model, MakeCut({0.0}, 1.0, {0.0}));
  const MilpSolution solution = SolveMilp(model.ToMilp(), nullptr, {}, {});
  EXPECT_EQ(solution.status, LpStatus::kInfeasible);
}

TEST(MasterModelTest, FlatCutBecomesConstantRow) {
  const LpRow row = MasterModel::CutRow(MakeCut({0.0, 0.0}, 5.0, {0.0, 0.0}));
  EXPECT_EQ(row.coefficients, (std::vector<double>{0.0, 0.0, 1.0}));
  EXPECT_EQ(row.sense, Sense::kGreaterEqual);
  EXPECT_EQ(row.rhs, 5.0);
}

TEST(MasterModelTest, CutIsTightAtItsAnchor) {
  const std::vector<double> anchor{1.0, 0.0, 1.0};
  const LpRow row = MasterModel::CutRow(MakeCut(anchor, 2.5, {0.3, -1.2, 4.0}));
  double lhs = 2.5;  // η at the anchor
  for (std::size_t j = 0; j < anchor.size(); ++j) lhs += row.coefficients[j] * anchor[j];
  EXPECT_NEAR(lhs - row.rhs, 0.0, 1e-15);
}

TEST(MasterModelTest, DuplicateCutLeavesObjectiveUnchanged) {
  MasterModel model{VariableLayout::Binary(3), {}, -10.0, 10.0};
  model.layout.AddCardinality(1.0);
  AppendCut(model, MakeCut({1, 0, 0}, 2.0, {1.0, -3.0, 0.5}));
  const double once = SolveMilp(model.ToMilp(), nullptr, {}, {}).objective;
  AppendCut(model, MakeCut({1, 0, 0}, 2.0, {1.0, -3.0, 0.5}));
  EXPECT_EQ(SolveMilp(model.ToMilp(), nullptr, {}, {}).objective, once);
}

TEST(MasterModelTest, RejectsNonFiniteCut) {
  MasterModel model{VariableLayout::Binary(2), {}, 0.0, 1.0};
  try {
    AppendCut(model, MakeCut({0.0, 0.0}, std::nan(""), {0.0, 0.0}));
    FAIL() << "expected invalid-argument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(AppendCut(model, MakeCut({0.0, 0.0}, 1.0, {INFINITY, 0.0})), Error);
}

TEST(MasterModelTest, DumpListsRowsAndBounds) {
  MasterModel model{VariableLayout::Binary(2), {}, 0.0, 4.0};
  AppendCut(model, MakeCut({0.0, 0.0}, 3.0, {-1.0, 0.0}));
  std::ostringstream out;
  model.Dump(out);
  const std::string text = out.str();
  EXPECT_NE(text.find("minimize: eta"), std::string::npos);
  EXPECT_NE(text.find("cut0: 1*z0 1*eta >= 3"), std::string::npos);
  EXPECT_NE(text.find("bound: 0 <= z1 <= 1 integer"), std::string::npos);
  EXPECT_NE(text.find("bound: 0 <= eta <= 4"), std::string::npos);
}

TEST(BranchAndBoundTest, NodeBudgetIsResourceExhausted) {
  const data::SskpInstance instance = data::GenerateSskp({300, 12, 8});
  MilpOptions options;
  options.node_limit = 2;
  try {
    SolveMilp(problems::SskpLinearReformulation(instance.data), nullptr, {}, options);
    FAIL() << "expected resource-exhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceExhausted);
  }
}

TEST(BranchAndBoundTest, RandomKnapsacksMatchEnumeration) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    MilpModel model;
    const std::size_t n = 8;
    model.lp.num_columns = n;
    model.lp.lower.assign(n, 0.0);
    model.lp.upper.assign(n, 1.0);
    LpRow weight{std::vector<double>(n), Sense::kLessEqual, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      model.lp.objective.push_back(-rng.Uniform(1.0, 10.0));
      weight.coefficients[j] = rng.Uniform(1.0, 10.0);
      model.integer_columns.push_back(j);
    }
    weight.rhs = 20.0;
    model.lp.rows.push_back(weight);
    const MilpSolution solution = SolveMilp(model, nullptr, {}, {});
    ASSERT_EQ(solution.status, LpStatus::kOptimal);
    const std::optional<double> reference = testing::MilpByEnumeration(model);
    ASSERT_TRUE(reference.has_value());
    EXPECT_NEAR(solution.objective, *reference, 1e-7);
  }
}

}  // namespace
}  // namespace scpkit::milp
