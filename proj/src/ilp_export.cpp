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

#include "interdict/ilp_export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "interdict/error.hpp"
#include "interdict/tree_dp.hpp"
#include "text_lines.hpp"

namespace interdict {

namespace {

// LP readers accept long lines, but some cap them; wrap well below that.
constexpr size_t kWrapColumn = 200;

class RowWriter {
 public:
  explicit RowWriter(std::ostringstream& out) : out_(out) {}

  void Start(const std::string& head) {
    out_ << head;
    column_ = head.size();
    first_ = true;
  }
  void Term(const std::string& term) {
    const std::string piece = (first_ ? " " : " + ") + term;
    if (column_ + piece.size() > kWrapColumn) {
      out_ << "\n  ";
      column_ = 2;
    }
    out_ << piece;
    column_ += piece.size();
    first_ = false;
  }
  void Finish(const std::string& tail) { out_ << ' ' << tail << '\n'; }

 private:
  std::ostringstream& out_;
  size_t column_ = 0;
  bool first_ = true;
};

std::string XName(NodeId v) { return "x_" + std::to_string(v); }
std::string YName(EdgeId e) { return "y_" + std::to_string(e); }

}  // namespace

IlpModel ExportReicLp(const Instance& instance) {
  if (instance.kind != ProblemKind::kEdgeInterdiction) {
    throw Error(ErrorCode::kWrongKind, "the LP model covers edge interdiction only");
  }
  const Graph& g = instance.graph;
  const RootedTree shape(g, 0);  // throws unless g is a tree
  const int n = g.node_count();
  const std::vector<NodeId> customers = instance.customers();
  const std::vector<NodeId> facilities = instance.facilities();

  IlpModel model;
  model.total_weight = instance.total_customer_weight();
  model.variables = static_cast<int>(customers.size()) + g.edge_count();

  std::ostringstream out;
  out << "\\ REIC edge interdiction model, " << n << " nodes, " << g.edge_count()
      << " edges, budget " << instance.budget << "\n";
  out << "\\ total_weight = " << internal::FormatShortest(model.total_weight) << "\n";
  out << "\\ REIC objective = total_weight - model optimum\n";
  out << "Minimize\n";
  RowWriter row(out);
  row.Start(" obj:");
  for (NodeId v : customers) {
    row.Term(internal::FormatShortest(instance.weight(v)) + " " + XName(v));
  }
  row.Finish("");

  out << "Subject To\n";
  std::vector<EdgeId> parent_edge(n);
  std::vector<NodeId> parent(n);
  for (NodeId s : facilities) {
    // Orient the tree towards s.
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::vector<NodeId> stack = {s};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (parent[inc.neighbor] < 0) {
          parent[inc.neighbor] = v;
          parent_edge[inc.neighbor] = inc.edge;
          stack.push_back(inc.neighbor);
        }
      }
    }
    for (NodeId v : customers) {
      row.Start(" c_" + std::to_string(v) + "_" + std::to_string(s) + ":");
      row.Term(XName(v));
      for (NodeId x = v; x != s; x = parent[x]) row.Term(YName(parent_edge[x]));
      row.Finish(">= 1");
      ++model.coverage_constraints;
    }
  }
  if (g.edge_count() > 0) {
    row.Start(" budget:");
    for (EdgeId e = 0; e < g.edge_count(); ++e) row.Term(YName(e));
    row.Finish("<= " + std::to_string(instance.budget));
  } else if (!customers.empty()) {
    row.Start(" budget:");
    row.Term("0 " + XName(customers.front()));
    row.Finish("<= " + std::to_string(instance.budget));
  }

  out << "Binary\n";
  for (NodeId v : customers) out << ' ' << XName(v) << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) out << ' ' << YName(e) << '\n';
  out << "End\n";
  model.text = out.str();
  return model;
}

Solution ImportSolution(const Instance& instance, std::string_view listing) {
  const int n = instance.node_count();
  const int m = instance.graph.edge_count();
  std::vector<int> x(n, -1), y(m, -1);  // -1: not listed
  auto inconsistent = [](const std::string& what) {
    throw Error(ErrorCode::kInconsistentSolution, what);
  };

  internal::TokenLines in(listing);
  while (in.Next()) {
    if (in.size() != 2) in.Fail("expected '<name> <value>'");
    const std::string name(in[0]);
    const double value = in.Real(1);
    int bit = -1;
    if (std::abs(value) <= 1e-6) bit = 0;
    if (std::abs(value - 1.0) <= 1e-6) bit = 1;
    if (bit < 0) inconsistent(name + " = " + std::string(in[1]) + " is not binary");

    long long id = -1;
    const bool is_x = name.rfind("x_", 0) == 0;
    const bool is_y = name.rfind("y_", 0) == 0;
    if (is_x || is_y) {
      const char* first = name.data() + 2;
      const char* last = name.data() + name.size();
      auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || ptr != last || first == last) id = -1;
    }
    std::vector<int>* slot = nullptr;
    if (is_x && id >= 0 && id < n && instance.is_customer(static_cast<NodeId>(id))) {
      slot = &x;
    } else if (is_y && id >= 0 && id < m) {
      slot = &y;
    } else {
      inconsistent("unknown variable '" + name + "'");
    }
    if ((*slot)[id] >= 0) inconsistent("variable '" + name + "' listed twice");
    (*slot)[id] = bit;
  }

  std::vector<int> removed;
  for (EdgeId e = 0; e < m; ++e) {
    if (y[e] == 1) removed.push_back(e);
  }
  if (static_cast<int>(removed.size()) > instance.budget) {
    inconsistent(std::to_string(removed.size()) + " edges removed, budget is " +
                 std::to_string(instance.budget));
  }
  Solution solution = MakeSolution(instance, std::move(removed));
  return solution;
}

}  // namespace interdict
