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

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "scpkit/bench/experiments.hpp"
#include "scpkit/core/error.hpp"
#include "scpkit/data/results_csv.hpp"
#include "scpkit/testing/properties.hpp"

namespace {

int Finish(const scpkit::bench::ExperimentOutput& output, const std::string& out_path) {
  if (!out_path.empty()) {
    scpkit::data::WriteResultsCsv(output.rows, out_path);
    std::cout << "wrote " << output.rows.size() << " rows to " << out_path << "\n";
  }
  if (output.failures > 0) {
    std::cerr << output.failures << " run(s) failed\n";
    return 1;
  }
  return 0;
}

int RunVerify(std::uint64_t seed, bool corrupt) {
  scpkit::testing::PropertyOptions options;
  options.seed = seed;
  options.corrupt_subgradient = corrupt;
  int failed = 0;
  for (const scpkit::testing::CheckResult& r : scpkit::testing::RunPropertySuites(options)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic cutting-plane benchmarks"};
  app.require_subcommand(1);

  scpkit::bench::ExperimentOptions options;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", options.seed, "base seed; replicate r uses seed + r");
    sub->add_option("--reps", options.reps, "replicates per cell (0 = experiment default)");
    sub->add_option("--epsilon", options.epsilon, "termination tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "CSV file for per-run results");
    sub->add_flag("--full", options.full, "run the large grid");
  };

  CLI::App* table1 = app.add_subcommand("table1", "sparse regression: full vs stochastic cutting planes");
  add_common(table1);
  CLI::App* table2 = app.add_subcommand("table2", "SVM on covertype");
  add_common(table2);
  table2->add_option("--covertype", options.covertype, "path to covtype.data or covtype.data.gz")->required();
  CLI::App* table3 = app.add_subcommand("table3", "stochastic knapsack");
  add_common(table3);
  CLI::App* sweep = app.add_subcommand("sweep", "sample-size sweep");
  add_common(sweep);
  sweep->add_option("--family", options.family, "sparsereg or sskp")
      ->check(CLI::IsMember({"sparsereg", "sskp"}));
  CLI::App* verify = app.add_subcommand("verify", "run the randomized correctness checks");
  verify->add_option("--seed", options.seed, "seed");
  bool corrupt = false;
  verify->add_flag("--corrupt-gradient", corrupt, "flip the subgradient sign (self-test)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return RunVerify(options.seed, corrupt);
    scpkit::bench::ExperimentOutput output;
    if (table1->parsed()) output = scpkit::bench::RunTable1(options, std::cout);
    if (table2->parsed()) output = scpkit::bench::RunTable2(options, std::cout);
    if (table3->parsed()) output = scpkit::bench::RunTable3(options, std::cout);
    if (sweep->parsed()) output = scpkit::bench::RunSweep(options, std::cout);
    return Finish(output, out_path);
  } catch (const scpkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == scpkit::ErrorCode::kInvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
