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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "interdict/btw_reic.hpp"
#include "interdict/error.hpp"
#include "interdict/oracle.hpp"
#include "interdict/tree_reic.hpp"
#include "interdict/tree_rfic.hpp"
#include "interdict/treewidth.hpp"
#include "text_lines.hpp"

namespace interdict {

namespace {

constexpr int kSmallInstance = 12;
constexpr std::uint32_t kRepStreamBase = 1000;
constexpr std::uint32_t kControlStreamBase = 500000;

struct Task {
  std::string id;
  GenConfig config;
  bool verify = false;
};

std::string Id(const GenConfig& c, std::string_view prefix, int index) {
  std::ostringstream id;
  id << prefix << FamilyName(c.family) << "-n" << c.n << "-p"
     << internal::FormatShortest(c.facility_probability) << "-r";
  if (c.budget_ratio >= 0) {
    id << internal::FormatShortest(c.budget_ratio) << "n";
  } else {
    id << c.budget;
  }
  id << "-k" << index;
  return id.str();
}

// Runs one task; fills exactly one of record / failure.
void RunTask(const Task& task, Algorithm algorithm, std::optional<BenchRecord>& record,
             std::optional<BenchFailure>& failure) {
  try {
    const Instance instance = Generate(task.config);
    BenchRecord out;
    out.instance_id = task.id;
    out.family = std::string(FamilyName(task.config.family));
    out.n = instance.node_count();
    out.m = instance.graph.edge_count();
    out.p = task.config.facility_probability;
    out.r = instance.budget;
    out.seed = task.config.seed;
    out.algorithm = std::string(AlgorithmName(algorithm));

    std::optional<NiceDecomposition> nice;
    if (algorithm == Algorithm::kBtw) {
      nice = ToExtendedNice(instance.graph, AutoDecomposition(instance.graph));
    }
    const auto start = std::chrono::steady_clock::now();
    const Solution solution = nice ? SolveBtwReic(instance, *nice).solution
                                   : RunAlgorithm(algorithm, instance);
    const auto stop = std::chrono::steady_clock::now();
    out.runtime_ns = std::max<std::int64_t>(
        1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    out.objective = solution.objective;

    if (task.verify && algorithm != Algorithm::kOracle &&
        instance.node_count() <= kSmallInstance) {
      const double expect = BruteForce(instance).objective;
      if (std::abs(expect - out.objective) > 1e-9 * std::max(1.0, std::abs(expect))) {
        throw std::runtime_error("objective " + internal::FormatShortest(out.objective) +
                                 " differs from brute force " +
                                 internal::FormatShortest(expect));
      }
    }
    record = std::move(out);
  } catch (const std::exception& e) {
    failure = BenchFailure{task.id, task.config.seed, e.what()};
  }
}

std::string Field(const BenchRecord& r, std::string_view name) {
  if (name == "instance_id") return r.instance_id;
  if (name == "family") return r.family;
  if (name == "n") return std::to_string(r.n);
  if (name == "m") return std::to_string(r.m);
  if (name == "p") return internal::FormatShortest(r.p);
  if (name == "r") return std::to_string(r.r);
  if (name == "seed") return std::to_string(r.seed);
  if (name == "algorithm") return r.algorithm;
  throw Error(ErrorCode::kInvalidArgument, "unknown group field '" + std::string(name) + "'");
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view text, int line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, "'" + std::string(text) + "' is not a number");
  }
  return value;
}

std::string Optional(const std::optional<double>& v) {
  return v ? internal::FormatShortest(*v) : "";
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kTree: return "tree";
    case Algorithm::kBtw: return "btw";
    case Algorithm::kRfic: return "rfic";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kTree, Algorithm::kBtw, Algorithm::kRfic, Algorithm::kOracle}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

ProblemKind AlgorithmKind(Algorithm algorithm) {
  return algorithm == Algorithm::kRfic ? ProblemKind::kFacilityInterdiction
                                       : ProblemKind::kEdgeInterdiction;
}

Solution RunAlgorithm(Algorithm algorithm, const Instance& instance) {
  switch (algorithm) {
    case Algorithm::kTree: return SolveTreeReic(instance).solution;
    case Algorithm::kBtw: return SolveBtwReic(instance).solution;
    case Algorithm::kRfic: return SolveTreeRfic(instance).solution;
    case Algorithm::kOracle: return BruteForce(instance);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

std::uint64_t RepSeed(std::uint64_t master_seed, int rep) {
  return Rng(master_seed, kRepStreamBase + static_cast<std::uint32_t>(rep)).Next();
}

BenchResult RunBenchmark(const BenchConfig& config) {
  if (config.reps < 0 || config.jobs < 1 || config.control_instances < 0) {
    throw Error(ErrorCode::kInvalidArgument, "reps, jobs and control count must be valid");
  }
  std::vector<double> ratios;
  std::vector<int> budgets;
  if (config.budget_ratio >= 0) {
    ratios.push_back(config.budget_ratio);
  } else {
    budgets = config.budgets;
  }
  const size_t budget_points = ratios.empty() ? budgets.size() : 1;

  std::vector<Task> tasks;
  for (int n : config.sizes) {
    for (double p : config.probabilities) {
      for (size_t bi = 0; bi < budget_points; ++bi) {
        GenConfig c = config.base;
        c.n = n;
        c.facility_probability = p;
        c.budget_ratio = ratios.empty() ? -1.0 : ratios[0];
        c.budget = ratios.empty() ? budgets[bi] : 0;
        if (config.algorithm != Algorithm::kOracle) c.kind = AlgorithmKind(config.algorithm);
        for (int k = 0; k < config.reps; ++k) {
          c.seed = RepSeed(config.master_seed, k);
          tasks.push_back({Id(c, "", k), c, config.verify_small});
        }
        for (int k = 0; k < config.control_instances; ++k) {
          GenConfig small = c;
          if (small.family == Family::kWalkerGrid) {
            small.planes = 2;
            small.n = 5;
          } else {
            small.n = kSmallInstance;
          }
          if (small.budget_ratio >= 0) {
            small.budget = static_cast<int>(std::lround(small.budget_ratio * n));
            small.budget_ratio = -1.0;
          }
          small.seed = Rng(config.master_seed, kControlStreamBase + k).Next();
          tasks.push_back({Id(small, "control-", k), small, true});
        }
      }
    }
  }

  std::vector<std::optional<BenchRecord>> records(tasks.size());
  std::vector<std::optional<BenchFailure>> failures(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      RunTask(tasks[i], config.algorithm, records[i], failures[i]);
    }
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchResult result;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (records[i]) result.records.push_back(std::move(*records[i]));
    if (failures[i]) result.failures.push_back(std::move(*failures[i]));
  }
  return result;
}

std::string FormatBenchCsv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.m << ','
        << internal::FormatShortest(r.p) << ',' << r.r << ',' << r.seed << ','
        << r.algorithm << ',' << internal::FormatShortest(r.objective) << ','
        << r.runtime_ns << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> ParseBenchCsv(std::string_view text) {
  std::vector<BenchRecord> out;
  int line_number = 0;
  size_t pos = 0;
  bool header = false;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      if (line != kBenchCsvHeader) {
        throw ParseError(line_number, "expected header '" + std::string(kBenchCsvHeader) + "'");
      }
      header = true;
      continue;
    }
    const auto f = SplitCommas(line);
    if (f.size() != 10) throw ParseError(line_number, "expected 10 fields");
    BenchRecord r;
    r.instance_id = std::string(f[0]);
    r.family = std::string(f[1]);
    r.n = ParseNumber<int>(f[2], line_number);
    r.m = ParseNumber<int>(f[3], line_number);
    r.p = ParseNumber<double>(f[4], line_number);
    r.r = ParseNumber<int>(f[5], line_number);
    r.seed = ParseNumber<std::uint64_t>(f[6], line_number);
    r.algorithm = std::string(f[7]);
    r.objective = ParseNumber<double>(f[8], line_number);
    r.runtime_ns = ParseNumber<std::int64_t>(f[9], line_number);
    out.push_back(std::move(r));
  }
  if (!header) throw ParseError(line_number, "missing CSV header");
  return out;
}

StatSummary SummarizeSamples(const std::vector<double>& samples) {
  StatSummary s;
  s.count = static_cast<int>(samples.size());
  if (samples.empty()) return s;
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double squares = 0.0;
    for (double x : samples) squares += (x - s.mean) * (x - s.mean);
    const double sd = std::sqrt(squares / (s.count - 1));
    s.stddev = sd;
    s.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(s.count));
    if (s.mean != 0.0) s.cv = sd / s.mean;
  }
  return s;
}

std::vector<StatSummary> Summarize(const std::vector<BenchRecord>& records,
                                   const std::vector<std::string>& group_by,
                                   std::string_view metric) {
  if (metric != "runtime_ns" && metric != "objective") {
    throw Error(ErrorCode::kInvalidArgument, "metric must be runtime_ns or objective");
  }
  for (const std::string& field : group_by) Field(BenchRecord{}, field);
  std::map<std::vector<std::string>, size_t> index;
  std::vector<std::vector<std::string>> keys;
  std::vector<std::vector<double>> samples;
  for (const BenchRecord& r : records) {
    std::vector<std::string> key;
    for (const std::string& field : group_by) key.push_back(Field(r, field));
    auto [it, inserted] = index.emplace(key, keys.size());
    if (inserted) {
      keys.push_back(key);
      samples.emplace_back();
    }
    samples[it->second].push_back(metric == "objective" ? r.objective
                                                        : static_cast<double>(r.runtime_ns));
  }
  std::vector<StatSummary> out;
  for (size_t g = 0; g < keys.size(); ++g) {
    StatSummary s = SummarizeSamples(samples[g]);
    s.key = keys[g];
    out.push_back(std::move(s));
  }
  return out;
}

std::string FormatSummaryCsv(const std::vector<std::string>& group_by,
                             const std::vector<StatSummary>& rows) {
  std::ostringstream out;
  for (const std::string& field : group_by) out << field << ',';
  out << "count,mean,std,ci95,cv\n";
  for (const StatSummary& s : rows) {
    for (const std::string& v : s.key) out << v << ',';
    out << s.count << ',' << internal::FormatShortest(s.mean) << ',' << Optional(s.stddev)
        << ',' << Optional(s.ci95) << ',' << Optional(s.cv) << '\n';
  }
  return out.str();
}

}  // namespace interdict
