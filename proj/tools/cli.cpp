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

#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "interdict/bench.hpp"
#include "interdict/btw_reic.hpp"
#include "interdict/graph.hpp"
#include "interdict/ilp_export.hpp"
#include "interdict/instance_io.hpp"
#include "interdict/instgen.hpp"
#include "interdict/oracle.hpp"
#include "interdict/tree_reic.hpp"
#include "interdict/tree_rfic.hpp"
#include "interdict/treewidth.hpp"
#include "json.hpp"

namespace interdict::cli {

namespace {

using nlohmann::json;

// Thrown for flag combinations CLI11 cannot check on its own.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

template <typename T>
std::vector<T> SplitList(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    T value{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError(std::string(flag) + ": '" + item + "' is not a number");
    }
    out.push_back(value);
  }
  if (out.empty()) throw ConfigError(std::string(flag) + " needs at least one value");
  return out;
}

std::vector<std::string> SplitNames(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// INTERDICT_SEED, when set, replaces the --seed value.
void ApplySeedOverride(std::uint64_t& seed) {
  const char* env = std::getenv("INTERDICT_SEED");
  if (env == nullptr) return;
  const std::string text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("INTERDICT_SEED='" + text + "' is not an unsigned integer");
  }
  seed = value;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

json Report(const Instance& instance, const Solution& solution, std::string_view algorithm) {
  json report;
  report["algorithm"] = algorithm;
  report["problem"] = ProblemKindName(instance.kind);
  report["nodes"] = instance.node_count();
  report["edges"] = instance.graph.edge_count();
  report["budget"] = instance.budget;
  report["objective"] = solution.objective;
  report["total_weight"] = instance.total_customer_weight();
  if (instance.kind == ProblemKind::kEdgeInterdiction) {
    json removed = json::array();
    for (EdgeId e : solution.removed_edges) {
      const Edge& edge = instance.graph.edge(e);
      removed.push_back({{"id", e}, {"u", edge.u}, {"v", edge.v}});
    }
    report["removed_edges"] = removed;
  } else {
    report["removed_facilities"] = solution.removed_facilities;
  }
  report["disconnected"] = solution.disconnected;
  return report;
}

void PrintSolution(const Instance& instance, const Solution& solution, std::ostream& out) {
  out << "objective " << solution.objective << '\n';
  if (instance.kind == ProblemKind::kEdgeInterdiction) {
    out << "removed_edges";
    for (EdgeId e : solution.removed_edges) {
      out << ' ' << e << '(' << instance.graph.edge(e).u << '-' << instance.graph.edge(e).v
          << ')';
    }
    out << '\n';
  } else {
    out << "removed_facilities " << Join(solution.removed_facilities) << '\n';
  }
  out << "disconnected " << Join(solution.disconnected) << '\n';
}

void PrintTreeTable(const TreeDpTable& table, std::ostream& out) {
  out << "node,condition,budget,value\n";
  for (NodeId v = 0; v < table.tree().node_count(); ++v) {
    for (Condition c : {Condition::k00, Condition::k01, Condition::k10, Condition::k11}) {
      for (int b = 0; b <= table.budget(); ++b) {
        out << v << ',' << ConditionName(c) << ',' << b << ',' << table.value(v, c, b) << '\n';
      }
    }
  }
}

void PrintBtwTable(const NiceDecomposition& nice, const BtwDpTable& table, std::ostream& out) {
  out << "node,kind,bag,labeling,budget,value\n";
  for (size_t t = 0; t < table.nodes.size(); ++t) {
    const BtwStates& s = table.nodes[t];
    std::vector<int> bag(s.bag.begin(), s.bag.end());
    for (std::uint32_t f = 0; f < s.labeling_count(); ++f) {
      std::string bits;
      for (size_t i = 0; i < s.bag.size(); ++i) bits += ((f >> i) & 1u) ? '1' : '0';
      for (int b = 0; b <= s.budget; ++b) {
        out << t << ',' << NiceKindName(nice.nodes[t].kind) << ',' << Join(bag) << ','
            << bits << ',' << b << ',' << s.value(f, b) << '\n';
      }
    }
  }
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongKind:
      return kExitConfig;
    case ErrorCode::kTooLarge:
      return kExitResource;
    case ErrorCode::kEmptyBucket:
    case ErrorCode::kInfeasible:
      return kExitFailure;
    default:
      return kExitInput;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering interdiction solvers for trees and bounded-treewidth graphs",
               "interdict"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // generate
  GenConfig gen;
  std::string gen_family = "prufer", gen_kind = "edge", gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--family", gen_family, "prufer | leaf-cluster | walker")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Nodes (satellites per plane for walker)")
      ->capture_default_str();
  generate->add_option("--planes", gen.planes, "Walker planes")->capture_default_str();
  generate->add_flag("--ring", gen.ring, "Close each walker plane into a ring");
  generate->add_option("--stations", gen.ground_stations, "Walker ground stations")
      ->capture_default_str();
  generate->add_option("--p", gen.facility_probability, "Facility probability")
      ->capture_default_str();
  generate->add_option("--max-weight", gen.max_weight, "1 for unit weights, else [1, W]")
      ->capture_default_str();
  generate->add_option("--budget", gen.budget, "Fixed budget")->capture_default_str();
  generate->add_option("--budget-ratio", gen.budget_ratio, "Budget as a fraction of nodes");
  generate->add_option("--kind", gen_kind, "edge | facility")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Seed (INTERDICT_SEED overrides)")
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_in, solve_algo = "tree", solve_decomp, solve_out;
  bool emit_table = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--in", solve_in, "Instance file")->required();
  solve->add_option("--algo", solve_algo, "tree | btw | rfic")->capture_default_str();
  solve->add_option("--decomp", solve_decomp, "TREEDEC file for btw");
  solve->add_option("--out", solve_out, "Write a JSON solution report");
  solve->add_flag("--emit-table", emit_table, "Print the DP table as CSV");

  // oracle
  std::string oracle_in, oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Solve a small instance by enumeration");
  oracle->add_option("--in", oracle_in, "Instance file")->required();
  oracle->add_option("--out", oracle_out, "Write a JSON solution report");

  // export-lp
  std::string lp_in, lp_out, lp_import;
  auto* export_lp = app.add_subcommand("export-lp", "Write the integer program of a tree");
  export_lp->add_option("--in", lp_in, "Instance file")->required();
  export_lp->add_option("--out", lp_out, "Model file (default stdout)");
  export_lp->add_option("--import", lp_import,
                        "Read a 'name value' solver listing instead of exporting");

  // decompose
  std::string dec_in, dec_method = "auto", dec_out;
  int dec_planes = 0, dec_per_plane = 0;
  auto* decompose = app.add_subcommand("decompose", "Build a tree decomposition");
  decompose->add_option("--in", dec_in, "Instance file")->required();
  decompose->add_option("--method", dec_method, "auto | forest | heuristic | grid")
      ->capture_default_str();
  decompose->add_option("--planes", dec_planes, "Grid planes (grid method)");
  decompose->add_option("--per-plane", dec_per_plane, "Grid vertices per plane (grid method)");
  decompose->add_option("--out", dec_out, "TREEDEC file (default stdout)");

  // validate
  std::string val_in, val_decomp;
  bool val_tree = false;
  auto* validate = app.add_subcommand("validate", "Check an instance and a decomposition");
  validate->add_option("--in", val_in, "Instance file")->required();
  validate->add_option("--decomp", val_decomp, "TREEDEC file");
  validate->add_flag("--tree", val_tree, "Also require a tree");

  // bench
  BenchConfig bench_config;
  std::string bench_family = "prufer", bench_algo = "tree", bench_out;
  std::string bench_n = "50", bench_p = "0.4", bench_r = "5";
  auto* bench = app.add_subcommand("bench", "Time a solver over generated instances");
  bench->add_option("--family", bench_family, "prufer | leaf-cluster | walker")
      ->capture_default_str();
  bench->add_option("--n", bench_n, "Comma-separated sizes")->capture_default_str();
  bench->add_option("--p", bench_p, "Comma-separated facility probabilities")
      ->capture_default_str();
  bench->add_option("--r", bench_r, "Comma-separated budgets")->capture_default_str();
  bench->add_option("--r-ratio", bench_config.budget_ratio, "Budget as a fraction of nodes");
  bench->add_option("--reps", bench_config.reps, "Instances per grid point")
      ->capture_default_str();
  bench->add_option("--seed", bench_config.master_seed, "Master seed (INTERDICT_SEED overrides)")
      ->capture_default_str();
  bench->add_option("--algo", bench_algo, "tree | btw | rfic | oracle")->capture_default_str();
  bench->add_option("--jobs", bench_config.jobs, "Worker threads")->capture_default_str();
  bench->add_flag("--verify-small", bench_config.verify_small,
                  "Check instances with at most 12 nodes by enumeration");
  bench->add_option("--control", bench_config.control_instances,
                    "Verified 12-node control instances per grid point");
  bench->add_option("--planes", bench_config.base.planes, "Walker planes");
  bench->add_flag("--ring", bench_config.base.ring, "Walker rings");
  bench->add_option("--stations", bench_config.base.ground_stations, "Walker ground stations");
  bench->add_option("--max-weight", bench_config.base.max_weight, "1 for unit weights");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  // stats
  std::string stats_in, stats_group = "family,n,p,r,algorithm", stats_metric = "runtime_ns",
                        stats_out;
  auto* stats = app.add_subcommand("stats", "Summarize a benchmark CSV");
  stats->add_option("--in", stats_in, "Benchmark CSV")->required();
  stats->add_option("--group-by", stats_group, "Comma-separated fields")->capture_default_str();
  stats->add_option("--metric", stats_metric, "runtime_ns | objective")->capture_default_str();
  stats->add_option("--out", stats_out, "CSV file (default stdout)");

  // joints
  std::string joints_in;
  auto* joints = app.add_subcommand("joints", "Count customer joints");
  joints->add_option("--in", joints_in, "Instance file")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (generate->parsed()) {
      gen.family = ParseFamily(gen_family);
      if (gen_kind == "edge") {
        gen.kind = ProblemKind::kEdgeInterdiction;
      } else if (gen_kind == "facility") {
        gen.kind = ProblemKind::kFacilityInterdiction;
      } else {
        throw ConfigError("--kind must be edge or facility");
      }
      ApplySeedOverride(gen.seed);
      Emit(gen_out, WriteInstance(Generate(gen)), out);
      return kExitOk;
    }

    if (solve->parsed()) {
      const Algorithm algo = ParseAlgorithm(solve_algo);
      if (algo == Algorithm::kOracle) throw ConfigError("use the oracle subcommand");
      if (!solve_decomp.empty() && algo != Algorithm::kBtw) {
        throw ConfigError("--decomp only applies to --algo btw");
      }
      const Instance instance = ReadInstanceFile(solve_in);
      if (instance.kind != AlgorithmKind(algo)) {
        throw Error(ErrorCode::kWrongKind,
                    "--algo " + solve_algo + " does not solve " +
                        std::string(ProblemKindName(instance.kind)) + " instances");
      }
      Solution solution;
      json extra;
      std::ostringstream table;
      if (algo == Algorithm::kBtw) {
        const TreeDecomposition td = solve_decomp.empty()
                                         ? AutoDecomposition(instance.graph)
                                         : ReadTreeDecomposition(ReadTextFile(solve_decomp));
        const NiceDecomposition nice = ToExtendedNice(instance.graph, td);
        BtwSolveResult result = SolveBtwReic(instance, nice);
        solution = std::move(result.solution);
        extra["width"] = nice.width();
        extra["nice_nodes"] = nice.nodes.size();
        extra["table_entries"] = result.table.state_count();
        if (emit_table) PrintBtwTable(nice, result.table, table);
      } else {
        TreeSolveResult result = algo == Algorithm::kTree ? SolveTreeReic(instance)
                                                          : SolveTreeRfic(instance);
        solution = std::move(result.solution);
        extra["root_condition"] = ConditionName(result.root_condition);
        extra["table_entries"] = result.table.value_entry_count();
        if (emit_table) PrintTreeTable(result.table, table);
      }
      PrintSolution(instance, solution, out);
      if (emit_table) out << table.str();
      if (!solve_out.empty()) {
        json report = Report(instance, solution, solve_algo);
        report.update(extra);
        WriteTextFile(solve_out, report.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      const Instance instance = ReadInstanceFile(oracle_in);
      const Solution solution = BruteForce(instance);
      PrintSolution(instance, solution, out);
      if (!oracle_out.empty()) {
        WriteTextFile(oracle_out, Report(instance, solution, "oracle").dump(2) + "\n");
      }
      return kExitOk;
    }

    if (export_lp->parsed()) {
      const Instance instance = ReadInstanceFile(lp_in);
      if (!lp_import.empty()) {
        PrintSolution(instance, ImportSolution(instance, ReadTextFile(lp_import)), out);
        return kExitOk;
      }
      const IlpModel model = ExportReicLp(instance);
      Emit(lp_out, model.text, out);
      if (!lp_out.empty() && lp_out != "-") {
        out << "coverage_constraints " << model.coverage_constraints << "\nvariables "
            << model.variables << "\ntotal_weight " << model.total_weight << '\n';
      }
      return kExitOk;
    }

    if (decompose->parsed()) {
      const Instance instance = ReadInstanceFile(dec_in);
      TreeDecomposition td;
      if (dec_method == "auto") {
        td = AutoDecomposition(instance.graph);
      } else if (dec_method == "forest") {
        td = TreeDecompositionOfForest(instance.graph);
      } else if (dec_method == "heuristic") {
        td = HeuristicDecomposition(instance.graph);
      } else if (dec_method == "grid") {
        if (dec_planes < 1 || dec_per_plane < 1) {
          throw ConfigError("grid method needs --planes and --per-plane");
        }
        td = GridDecomposition(dec_planes, dec_per_plane);
      } else {
        throw ConfigError("unknown method '" + dec_method + "'");
      }
      const auto violations = ValidateDecomposition(instance.graph, td);
      if (!violations.empty()) {
        throw Error(ErrorCode::kInvalidDecomposition, violations.front().message);
      }
      Emit(dec_out, WriteTreeDecomposition(td), out);
      if (!dec_out.empty() && dec_out != "-") {
        const NiceDecomposition nice = ToExtendedNice(instance.graph, td);
        out << "width " << td.width() << "\nbags " << td.bags.size() << "\nnice_nodes "
            << nice.nodes.size() << '\n';
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      const Instance instance = ReadInstanceFile(val_in);
      std::vector<std::string> problems;
      for (const Violation& v : ValidateInstance(instance, val_tree)) {
        problems.push_back("instance: " + v.message);
      }
      if (!val_decomp.empty()) {
        const TreeDecomposition td = ReadTreeDecomposition(ReadTextFile(val_decomp));
        for (const auto& v : ValidateDecomposition(instance.graph, td)) {
          problems.push_back("decomposition: " + std::string(DecompositionViolationName(v.kind)) +
                             ": " + v.message);
        }
        if (problems.empty()) {
          for (const std::string& p : ValidateNice(instance.graph,
                                                   ToExtendedNice(instance.graph, td))) {
            problems.push_back("nice decomposition: " + p);
          }
        }
      }
      for (const std::string& p : problems) out << p << '\n';
      if (!problems.empty()) return kExitInput;
      out << "ok\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      bench_config.base.family = ParseFamily(bench_family);
      bench_config.algorithm = ParseAlgorithm(bench_algo);
      bench_config.sizes = SplitList<int>(bench_n, "--n");
      bench_config.probabilities = SplitList<double>(bench_p, "--p");
      if (bench_config.budget_ratio < 0) bench_config.budgets = SplitList<int>(bench_r, "--r");
      if (bench_config.reps < 1 || bench_config.jobs < 1) {
        throw ConfigError("--reps and --jobs must be >= 1");
      }
      ApplySeedOverride(bench_config.master_seed);
      const BenchResult result = RunBenchmark(bench_config);
      Emit(bench_out, FormatBenchCsv(result.records), out);
      for (const BenchFailure& f : result.failures) {
        err << "instance " << f.instance_id << " (seed " << f.seed << ") failed: " << f.message
            << '\n';
      }
      return result.failures.empty() ? kExitOk : kExitFailure;
    }

    if (stats->parsed()) {
      const auto records = ParseBenchCsv(ReadTextFile(stats_in));
      const auto group_by = SplitNames(stats_group);
      Emit(stats_out, FormatSummaryCsv(group_by, Summarize(records, group_by, stats_metric)),
           out);
      return kExitOk;
    }

    if (joints->parsed()) {
      out << CountCustomerJoints(ReadInstanceFile(joints_in)) << '\n';
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitConfig;
}

}  // namespace interdict::cli
