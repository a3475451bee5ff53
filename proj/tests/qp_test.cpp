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

#include "scpkit/qp/qp_master.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "scpkit/core/random.hpp"
#include "scpkit/qp/cut_master.hpp"
#include "scpkit/testing/oracles.hpp"
#include "scpkit/testing/properties.hpp"

namespace scpkit::qp {
namespace {

TEST(QpTest, SingleZeroCut) {
  QpMaster master{3, 5.0, {{{0.0, 0.0, 0.0}, 0.0}}};
  const QpSolution s = SolveQp(master);
  EXPECT_EQ(s.theta, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_NEAR(s.xi, 0.0, 1e-12);
  EXPECT_NEAR(s.objective, 0.0, 1e-12);
}

TEST(QpTest, UnitCutWithLargeC) {
  QpMaster master{2, 1e4, {{{1.0, 0.0}, 1.0}}};
  const QpSolution s = SolveQp(master);
  EXPECT_NEAR(s.theta[0], 1.0, 1e-9);
  EXPECT_NEAR(s.theta[1], 0.0, 1e-12);
  EXPECT_NEAR(s.xi, 0.0, 1e-9);
  EXPECT_NEAR(s.objective, 0.5, 1e-9);
  EXPECT_TRUE(s.converged);
}

TEST(QpTest, RandomFiveCutInstancesMatchActiveSetEnumeration) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    QpMaster master{3, 10.0, {}};
    for (int c = 0; c < 5; ++c) {
      QpCut cut;
      for (int j = 0; j < 3; ++j) cut.a.push_back(rng.Uniform(-2.0, 2.0));
      cut.b = rng.Uniform(-1.0, 3.0);
      master.cuts.push_back(cut);
    }
    const QpSolution s = SolveQp(master);
    const testing::QpReference ref = testing::QpByActiveSets(master);
    const double scale = 1.0 + std::abs(ref.objective);
    EXPECT_NEAR(s.objective, ref.objective, 1e-7 * scale) << "trial " << trial;
    EXPECT_NEAR(s.objective, s.dual_objective, 1e-7 * scale) << "trial " << trial;
  }
}

TEST(QpTest, CutMasterTranslatesEngineCuts) {
  QpCutMaster master(1e4);
  VariableLayout layout = VariableLayout::Continuous(2, -10.0, 10.0);
  master.Reset(layout, 0.0, 1.0);
  // f(θ) ≥ 1 − θ₁ anchored at θ = 0.
  Cut cut;
  cut.anchor = {0.0, 0.0};
  cut.value = 1.0;
  cut.gradient = {-1.0, 0.0};
  master.AddCut(cut);
  const MasterResult r = master.Solve();
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.point[0], 1.0, 1e-9);
  EXPECT_NEAR(r.eta, 0.0, 1e-9);
  EXPECT_EQ(master.unconverged_solves(), 0u);
}

TEST(QpTest, RejectsIntegerLayouts) {
  QpCutMaster master(1.0);
  EXPECT_THROW(master.Reset(VariableLayout::Binary(2), 0.0, 1.0), Error);
}

TEST(QpPropertyTest, KktAndDuality) {
  const testing::CheckResult r = testing::CheckQp();
  EXPECT_TRUE(r.passed) << r.detail;
}

}  // namespace
}  // namespace scpkit::qp
