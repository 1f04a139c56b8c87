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

#ifndef INTERDICT_BENCH_HPP_
#define INTERDICT_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interdict/graph.hpp"
#include "interdict/instgen.hpp"

namespace interdict {

enum class Algorithm : std::uint8_t { kTree, kBtw, kRfic, kOracle };

std::string_view AlgorithmName(Algorithm algorithm);  // "tree", "btw", "rfic", "oracle"
// Throws kInvalidArgument for an unknown name.
Algorithm ParseAlgorithm(std::string_view name);

// Problem kind an algorithm solves. The oracle takes the instance's kind.
ProblemKind AlgorithmKind(Algorithm algorithm);

// Solves `instance` with `algorithm`; btw builds its own decomposition.
// Throws kWrongKind when the instance kind does not fit.
Solution RunAlgorithm(Algorithm algorithm, const Instance& instance);

struct BenchRecord {
  std::string instance_id;
  std::string family;
  int n = 0;  // nodes
  int m = 0;  // edges
  double p = 0.0;
  int r = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double objective = 0.0;
  std::int64_t runtime_ns = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "instance_id,family,n,m,p,r,seed,algorithm,objective,runtime_ns";

struct BenchConfig {
  GenConfig base;  // family, planes, ring, stations, max_weight
  std::vector<int> sizes = {50};
  std::vector<double> probabilities = {0.4};
  std::vector<int> budgets = {5};
  double budget_ratio = -1.0;  // when >= 0, overrides `budgets`
  int reps = 1;
  std::uint64_t master_seed = 1;
  Algorithm algorithm = Algorithm::kTree;
  int jobs = 1;
  // Re-solve every instance with at most 12 nodes by brute force.
  bool verify_small = false;
  // Extra 12-node instances per grid point, always verified by brute force.
  int control_instances = 0;
};

struct BenchFailure {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::string message;
};

struct BenchResult {
  std::vector<BenchRecord> records;  // grid order, then rep order
  std::vector<BenchFailure> failures;
};

// Seed of the rep-th instance for a master seed. Reps share seeds across
// grid points, so one rep index names the same random draws everywhere.
std::uint64_t RepSeed(std::uint64_t master_seed, int rep);

// Generates the grid (sizes x probabilities x budgets x reps), solves each
// instance and times the solver call alone with a monotonic clock. Failing
// instances are reported in `failures` and leave no record; the rest are
// kept. Up to `jobs` instances run at once; output order is fixed.
BenchResult RunBenchmark(const BenchConfig& config);

std::string FormatBenchCsv(const std::vector<BenchRecord>& records);
// Throws ParseError on a bad header or row.
std::vector<BenchRecord> ParseBenchCsv(std::string_view text);

struct StatSummary {
  std::vector<std::string> key;  // values of the group-by fields
  int count = 0;
  double mean = 0.0;
  std::optional<double> stddev;  // sample deviation; empty for count 1
  std::optional<double> ci95;    // 1.96 * stddev / sqrt(count)
  std::optional<double> cv;      // stddev / mean; empty when mean is 0
};

// Groups records by the named fields (any CSV column except the metric) and
// summarizes `metric` ("runtime_ns" or "objective"). Groups appear in order
// of first occurrence. Throws kInvalidArgument for unknown field names.
std::vector<StatSummary> Summarize(const std::vector<BenchRecord>& records,
                                   const std::vector<std::string>& group_by,
                                   std::string_view metric = "runtime_ns");

// Summary statistics of raw samples (key left empty).
StatSummary SummarizeSamples(const std::vector<double>& samples);

std::string FormatSummaryCsv(const std::vector<std::string>& group_by,
                             const std::vector<StatSummary>& rows);

}  // namespace interdict

#endif  // INTERDICT_BENCH_HPP_
