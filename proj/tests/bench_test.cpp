// Copyright 2026 The Interdict Authors
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

#include "interdict/bench.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "interdict/error.hpp"

namespace interdict {
namespace {

BenchConfig Small() {
  BenchConfig config;
  config.sizes = {50};
  config.probabilities = {0.4};
  config.budgets = {5};
  config.reps = 3;
  config.master_seed = 17;
  return config;
}

TEST(BenchTest, OneRowPerRep) {
  const BenchResult result = RunBenchmark(Small());
  ASSERT_EQ(result.records.size(), 3u);
  EXPECT_TRUE(result.failures.empty());
  for (const BenchRecord& r : result.records) {
    EXPECT_GT(r.runtime_ns, 0);
    EXPECT_GE(r.objective, 0.0);
    EXPECT_EQ(r.n, 50);
    EXPECT_EQ(r.m, 49);
    EXPECT_EQ(r.algorithm, "tree");
  }
  const BenchResult again = RunBenchmark(Small());
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(again.records[i].seed, result.records[i].seed);
    EXPECT_EQ(again.records[i].objective, result.records[i].objective);
    EXPECT_EQ(again.records[i].instance_id, result.records[i].instance_id);
  }
  EXPECT_NE(result.records[0].seed, result.records[1].seed);
}

TEST(BenchTest, GridSizeAndRatio) {
  BenchConfig config = Small();
  config.sizes = {100, 200};
  config.budget_ratio = 0.1;
  config.reps = 2;
  const BenchResult result = RunBenchmark(config);
  ASSERT_EQ(result.records.size(), 4u);
  EXPECT_EQ(result.records[0].r, 10);
  EXPECT_EQ(result.records[3].r, 20);
}

TEST(BenchTest, ParallelRunsKeepOrder) {
  BenchConfig config = Small();
  config.sizes = {20, 40, 60, 80};
  config.probabilities = {0.3, 0.5};
  config.reps = 3;
  const BenchResult serial = RunBenchmark(config);
  config.jobs = 4;
  const BenchResult parallel = RunBenchmark(config);
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  for (size_t i = 0; i < serial.records.size(); ++i) {
    EXPECT_EQ(serial.records[i].instance_id, parallel.records[i].instance_id);
    EXPECT_EQ(serial.records[i].objective, parallel.records[i].objective);
  }
}

TEST(BenchTest, VerifiesSmallInstancesAndControls) {
  for (Algorithm algorithm : {Algorithm::kTree, Algorithm::kBtw, Algorithm::kRfic}) {
    BenchConfig config = Small();
    config.sizes = {6, 12};
    config.budgets = {2};
    config.reps = 5;
    config.verify_small = true;
    config.control_instances = 2;
    config.algorithm = algorithm;
    const BenchResult result = RunBenchmark(config);
    EXPECT_TRUE(result.failures.empty()) << result.failures.front().message;
    EXPECT_EQ(result.records.size(), 14u);
    EXPECT_EQ(result.records[5].instance_id.rfind("control-", 0), 0u);
  }
}

TEST(BenchTest, FailuresKeepOtherRows) {
  BenchConfig config = Small();
  config.algorithm = Algorithm::kOracle;
  config.sizes = {8, 40};
  config.budgets = {12};
  config.reps = 1;
  const BenchResult result = RunBenchmark(config);
  ASSERT_EQ(result.records.size(), 1u);
  ASSERT_EQ(result.failures.size(), 1u);
  EXPECT_NE(result.failures[0].seed, 0u);
  EXPECT_NE(result.failures[0].message.find("TooLarge"), std::string::npos)
      << result.failures[0].message;
}

TEST(BenchCsvTest, RoundTrip) {
  const BenchResult result = RunBenchmark(Small());
  const std::string csv = FormatBenchCsv(result.records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kBenchCsvHeader);
  const std::vector<BenchRecord> back = ParseBenchCsv(csv);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(FormatBenchCsv(back), csv);
  EXPECT_THROW(ParseBenchCsv("a,b\n"), ParseError);
  EXPECT_THROW(ParseBenchCsv(std::string(kBenchCsvHeader) + "\nx,prufer,1\n"), ParseError);
}

TEST(SummarizeTest, ConstantSamples) {
  const StatSummary s = SummarizeSamples({1, 1, 1});
  EXPECT_EQ(s.mean, 1.0);
  EXPECT_EQ(s.stddev, 0.0);
  EXPECT_EQ(s.cv, 0.0);
  EXPECT_EQ(s.ci95, 0.0);
}

TEST(SummarizeTest, SingleSampleLeavesSpreadEmpty) {
  const StatSummary s = SummarizeSamples({4});
  EXPECT_EQ(s.count, 1);
  EXPECT_EQ(s.mean, 4.0);
  EXPECT_FALSE(s.stddev.has_value());
  EXPECT_FALSE(s.ci95.has_value());
  EXPECT_FALSE(s.cv.has_value());
  EXPECT_FALSE(SummarizeSamples({0, 0}).cv.has_value());
}

TEST(SummarizeTest, ClosedForm) {
  // 2, 4, 4, 4, 5, 5, 7, 9: mean 5, sum of squared deviations 32.
  const StatSummary s = SummarizeSamples({2, 4, 4, 4, 5, 5, 7, 9});
  const double sd = std::sqrt(32.0 / 7.0);
  EXPECT_NEAR(s.mean, 5.0, 1e-12);
  EXPECT_NEAR(*s.stddev, sd, 1e-12);
  EXPECT_NEAR(*s.ci95, 1.96 * sd / std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(*s.cv, sd / 5.0, 1e-12);
}

TEST(SummarizeTest, GroupsRecords) {
  std::vector<BenchRecord> records(5);
  const int n[] = {10, 20, 10, 20, 10};
  const std::int64_t t[] = {1, 5, 3, 7, 5};
  for (int i = 0; i < 5; ++i) {
    records[i].n = n[i];
    records[i].runtime_ns = t[i];
    records[i].algorithm = "tree";
  }
  const auto rows = Summarize(records, {"n", "algorithm"});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].key, (std::vector<std::string>{"10", "tree"}));
  EXPECT_EQ(rows[0].count, 3);
  EXPECT_EQ(rows[0].mean, 3.0);
  EXPECT_EQ(rows[1].mean, 6.0);
  EXPECT_EQ(FormatSummaryCsv({"n", "algorithm"}, rows).substr(0, 33),
            "n,algorithm,count,mean,std,ci95,c");
  EXPECT_THROW(Summarize(records, {"colour"}), Error);
  EXPECT_THROW(Summarize(records, {"n"}, "memory"), Error);
}

TEST(AlgorithmTest, Names) {
  for (Algorithm a : {Algorithm::kTree, Algorithm::kBtw, Algorithm::kRfic, Algorithm::kOracle}) {
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  }
  EXPECT_THROW(ParseAlgorithm("greedy"), Error);
}

}  // namespace
}  // namespace interdict
