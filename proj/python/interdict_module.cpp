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

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "interdict/bench.hpp"
#include "interdict/btw_reic.hpp"
#include "interdict/error.hpp"
#include "interdict/graph.hpp"
#include "interdict/ilp_export.hpp"
#include "interdict/instance_io.hpp"
#include "interdict/instgen.hpp"
#include "interdict/knapsack.hpp"
#include "interdict/oracle.hpp"
#include "interdict/reductions.hpp"
#include "interdict/tree_reic.hpp"
#include "interdict/tree_rfic.hpp"
#include "interdict/treewidth.hpp"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;

namespace interdict {
namespace {

ProblemKind KindFromName(const std::string& name) {
  if (name == "edge") return ProblemKind::kEdgeInterdiction;
  if (name == "facility") return ProblemKind::kFacilityInterdiction;
  throw Error(ErrorCode::kInvalidArgument, "kind must be 'edge' or 'facility'");
}

std::vector<Edge> ToEdges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

Instance MakeInstance(int n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& facilities, std::optional<std::vector<double>> weights,
                      int budget, const std::string& kind) {
  Instance inst;
  inst.graph = Graph(n, ToEdges(edges));
  inst.roles.assign(n, Role::kCustomer);
  inst.weights = weights ? *weights : std::vector<double>(n, 1.0);
  if (static_cast<int>(inst.weights.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "need one weight per node");
  }
  for (int f : facilities) {
    if (f < 0 || f >= n) throw Error(ErrorCode::kInvalidArgument, "facility id out of range");
    inst.roles[f] = Role::kFacility;
    inst.weights[f] = 0.0;
  }
  inst.budget = budget;
  inst.kind = KindFromName(kind);
  for (const Violation& v : ValidateInstance(inst)) {
    throw Error(ErrorCode::kInvalidArgument, v.message);
  }
  return inst;
}

std::vector<std::pair<int, int>> EdgePairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object ToPython(DpValue v) {
  if (!v.is_finite()) return py::none();
  return py::float_(v.value());
}

}  // namespace
}  // namespace interdict

PYBIND11_MODULE(interdict, m) {
  using namespace interdict;
  m.doc() = "Covering interdiction solvers for trees and bounded-treewidth graphs.";

  py::register_exception<Error>(m, "InterdictError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&MakeInstance), py::arg("n"), py::arg("edges"), py::arg("facilities"),
           py::arg("weights") = py::none(), py::arg("budget") = 0, py::arg("kind") = "edge")
      .def_property_readonly("node_count", &Instance::node_count)
      .def_property_readonly("edges", [](const Instance& i) { return EdgePairs(i.graph); })
      .def_property_readonly("facilities", &Instance::facilities)
      .def_property_readonly("customers", &Instance::customers)
      .def_property_readonly("weights", [](const Instance& i) { return i.weights; })
      .def_property_readonly("total_customer_weight", &Instance::total_customer_weight)
      .def_property("budget", [](const Instance& i) { return i.budget; },
                    [](Instance& i, int b) {
                      if (b < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 0");
                      i.budget = b;
                    })
      .def_property_readonly("kind",
                             [](const Instance& i) { return std::string(ProblemKindName(i.kind)); })
      .def("is_tree", [](const Instance& i) { return i.graph.is_tree(); })
      .def("to_text", [](const Instance& i) { return WriteInstance(i); })
      .def_static("from_text", [](const std::string& text) { return ReadInstance(text); })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + std::string(ProblemKindName(i.kind)) + " n=" +
               std::to_string(i.node_count()) + " m=" + std::to_string(i.graph.edge_count()) +
               " r=" + std::to_string(i.budget) + ">";
      });

  py::class_<Solution>(m, "Solution")
      .def_readonly("objective", &Solution::objective)
      .def_readonly("removed_edges", &Solution::removed_edges)
      .def_readonly("removed_facilities", &Solution::removed_facilities)
      .def_readonly("disconnected", &Solution::disconnected)
      .def("__repr__", [](const Solution& s) {
        return "<Solution objective=" + std::to_string(s.objective) + ">";
      });

  py::class_<TreeDecomposition>(m, "TreeDecomposition")
      .def(py::init<>())
      .def_readwrite("bags", &TreeDecomposition::bags)
      .def_readwrite("links", &TreeDecomposition::links)
      .def_readwrite("root", &TreeDecomposition::root)
      .def_property_readonly("width", &TreeDecomposition::width)
      .def("to_text", [](const TreeDecomposition& t) { return WriteTreeDecomposition(t); })
      .def_static("from_text", [](const std::string& text) { return ReadTreeDecomposition(text); });

  m.def("read_instance", [](const std::string& path) { return ReadInstanceFile(path); },
        py::arg("path"));
  m.def("write_instance", [](const Instance& i, const std::string& path) {
    WriteTextFile(path, WriteInstance(i));
  }, py::arg("instance"), py::arg("path"));

  m.def(
      "generate",
      [](const std::string& family, int n, double p, int budget, std::uint64_t seed,
         int max_weight, const std::string& kind, int planes, bool ring, int stations,
         std::optional<double> budget_ratio) {
        GenConfig c;
        c.family = ParseFamily(family);
        c.n = n;
        c.facility_probability = p;
        c.budget = budget;
        c.seed = seed;
        c.max_weight = max_weight;
        c.kind = KindFromName(kind);
        c.planes = planes;
        c.ring = ring;
        c.ground_stations = stations;
        c.budget_ratio = budget_ratio.value_or(-1.0);
        return Generate(c);
      },
      py::arg("family") = "prufer", py::arg("n") = 10, py::arg("p") = 0.4,
      py::arg("budget") = 0, py::arg("seed") = 1, py::arg("max_weight") = 1,
      py::arg("kind") = "edge", py::arg("planes") = 1, py::arg("ring") = false,
      py::arg("stations") = 2, py::arg("budget_ratio") = py::none(),
      "Seeded random instance of the prufer, leaf-cluster or walker family.");

  m.def("solve_tree_reic", [](const Instance& i) { return SolveTreeReic(i).solution; },
        py::arg("instance"), "Edge interdiction on a tree.");
  m.def("solve_tree_rfic", [](const Instance& i) { return SolveTreeRfic(i).solution; },
        py::arg("instance"), "Facility interdiction on a tree.");
  m.def(
      "solve_btw_reic",
      [](const Instance& i, std::optional<TreeDecomposition> td) {
        if (!td) return SolveBtwReic(i).solution;
        return SolveBtwReic(i, ToExtendedNice(i.graph, *td)).solution;
      },
      py::arg("instance"), py::arg("decomposition") = py::none(),
      "Edge interdiction over a tree decomposition (built automatically if omitted).");
  m.def("brute_force", &BruteForce, py::arg("instance"), "Exhaustive search for small inputs.");
  m.def(
      "evaluate_strategy",
      [](const Instance& i, const std::vector<int>& removed) {
        const CoverageReport r = EvaluateStrategy(i, removed);
        return py::make_tuple(r.disconnected_weight, r.disconnected);
      },
      py::arg("instance"), py::arg("removed"),
      "Disconnected weight and customers after removing edges or facilities.");
  m.def("count_customer_joints", &CountCustomerJoints, py::arg("instance"));

  m.def("forest_decomposition",
        [](const Instance& i) { return TreeDecompositionOfForest(i.graph); }, py::arg("instance"));
  m.def("heuristic_decomposition",
        [](const Instance& i) { return HeuristicDecomposition(i.graph); }, py::arg("instance"));
  m.def("auto_decomposition", [](const Instance& i) { return AutoDecomposition(i.graph); },
        py::arg("instance"));
  m.def("grid_decomposition", &GridDecomposition, py::arg("planes"), py::arg("per_plane"));
  m.def(
      "validate_decomposition",
      [](const Instance& i, const TreeDecomposition& td) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : ValidateDecomposition(i.graph, td)) {
          out.emplace_back(std::string(DecompositionViolationName(v.kind)), v.message);
        }
        return out;
      },
      py::arg("instance"), py::arg("decomposition"));
  m.def(
      "nice_decomposition_stats",
      [](const Instance& i, const TreeDecomposition& td) {
        const NiceDecomposition nice = ToExtendedNice(i.graph, td);
        py::dict out;
        out["nodes"] = nice.nodes.size();
        out["width"] = nice.width();
        out["problems"] = ValidateNice(i.graph, nice);
        return out;
      },
      py::arg("instance"), py::arg("decomposition"));

  m.def(
      "export_reic_lp",
      [](const Instance& i) {
        const IlpModel model = ExportReicLp(i);
        py::dict out;
        out["text"] = model.text;
        out["coverage_constraints"] = model.coverage_constraints;
        out["variables"] = model.variables;
        out["total_weight"] = model.total_weight;
        return out;
      },
      py::arg("instance"));
  m.def("import_solution", &ImportSolution, py::arg("instance"), py::arg("listing"));

  m.def(
      "solve_ssbve_tree",
      [](int left, int right, const std::vector<std::pair<int, int>>& edges, int k) {
        const SsbveResult r = SolveSsbveTree({left, right, edges, k});
        return py::make_tuple(r.subset, r.neighborhood);
      },
      py::arg("left_count"), py::arg("right_count"), py::arg("edges"), py::arg("k"),
      "Smallest-neighbourhood k-subset of the left side of a bipartite tree.");
  m.def(
      "to_bip_rfic",
      [](const Instance& i) {
        BipRficReduction r = ToBipRfic(i);
        return py::make_tuple(std::move(r.instance), r.node_map);
      },
      py::arg("instance"));
  m.def(
      "clique_gadget",
      [](int n, const std::vector<std::pair<int, int>>& edges, int k) {
        return CliqueGadget(Graph(n, ToEdges(edges)), k);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"));

  m.def(
      "solve_mckp",
      [](const std::vector<std::vector<std::tuple<int, double, bool>>>& buckets, int capacity,
         bool constrained) {
        CmckpInstance inst;
        inst.capacity = capacity;
        for (const auto& bucket : buckets) {
          KnapsackBucket b;
          for (const auto& [cost, value, property] : bucket) {
            b.push_back({cost, DpValue::Finite(value), property});
          }
          inst.buckets.push_back(std::move(b));
        }
        const KnapsackTable table = constrained ? SolveCmckp(inst) : SolveMckp(inst);
        py::list values;
        for (DpValue v : table.values()) values.append(ToPython(v));
        return values;
      },
      py::arg("buckets"), py::arg("capacity"), py::arg("constrained") = false,
      "Best value per capacity 0..C (None when infeasible); items are (cost, value, "
      "property).");

  m.def(
      "run_benchmark",
      [](const std::string& family, const std::vector<int>& sizes,
         const std::vector<double>& probabilities, const std::vector<int>& budgets, int reps,
         std::uint64_t seed, const std::string& algorithm, int jobs, bool verify_small) {
        BenchConfig c;
        c.base.family = ParseFamily(family);
        c.sizes = sizes;
        c.probabilities = probabilities;
        c.budgets = budgets;
        c.reps = reps;
        c.master_seed = seed;
        c.algorithm = ParseAlgorithm(algorithm);
        c.jobs = jobs;
        c.verify_small = verify_small;
        py::gil_scoped_release release;
        return RunBenchmark(c);
      },
      py::arg("family") = "prufer", py::arg("sizes") = std::vector<int>{50},
      py::arg("probabilities") = std::vector<double>{0.4},
      py::arg("budgets") = std::vector<int>{5}, py::arg("reps") = 1, py::arg("seed") = 1,
      py::arg("algorithm") = "tree", py::arg("jobs") = 1, py::arg("verify_small") = false);

  py::class_<BenchRecord>(m, "BenchRecord")
      .def_readonly("instance_id", &BenchRecord::instance_id)
      .def_readonly("family", &BenchRecord::family)
      .def_readonly("n", &BenchRecord::n)
      .def_readonly("m", &BenchRecord::m)
      .def_readonly("p", &BenchRecord::p)
      .def_readonly("r", &BenchRecord::r)
      .def_readonly("seed", &BenchRecord::seed)
      .def_readonly("algorithm", &BenchRecord::algorithm)
      .def_readonly("objective", &BenchRecord::objective)
      .def_readonly("runtime_ns", &BenchRecord::runtime_ns);
  py::class_<BenchFailure>(m, "BenchFailure")
      .def_readonly("instance_id", &BenchFailure::instance_id)
      .def_readonly("seed", &BenchFailure::seed)
      .def_readonly("message", &BenchFailure::message);
  py::class_<BenchResult>(m, "BenchResult")
      .def_readonly("records", &BenchResult::records)
      .def_readonly("failures", &BenchResult::failures)
      .def("to_csv", [](const BenchResult& r) { return FormatBenchCsv(r.records); });

  m.def(
      "summarize",
      [](const std::vector<double>& samples) {
        const StatSummary s = SummarizeSamples(samples);
        py::dict out;
        out["count"] = s.count;
        out["mean"] = s.mean;
        out["std"] = s.stddev ? py::object(py::float_(*s.stddev)) : py::none();
        out["ci95"] = s.ci95 ? py::object(py::float_(*s.ci95)) : py::none();
        out["cv"] = s.cv ? py::object(py::float_(*s.cv)) : py::none();
        return out;
      },
      py::arg("samples"), "Mean, sample std, normal-approximation ci95 and cv.");
}
