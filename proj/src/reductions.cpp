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

#include "interdict/reductions.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "interdict/error.hpp"
#include "interdict/tree_rfic.hpp"

namespace interdict {

Graph BipartiteInstance::underlying_graph() const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= left_count || v < 0 || v >= right_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") leaves the bipartition");
    }
    out.push_back({u, left_count + v});
  }
  return Graph(left_count + right_count, out);
}

SsbveResult SolveSsbveTree(const BipartiteInstance& bipartite) {
  const int u_count = bipartite.left_count;
  if (bipartite.k < 0 || bipartite.k > u_count) {
    throw Error(ErrorCode::kBadK, "k = " + std::to_string(bipartite.k) +
                                      " outside [0, " + std::to_string(u_count) + "]");
  }
  Instance rfic;
  rfic.graph = bipartite.underlying_graph();
  if (!rfic.graph.is_tree()) {
    throw Error(ErrorCode::kNotATree, "underlying graph is not a tree");
  }
  const int n = rfic.graph.node_count();
  rfic.roles.assign(n, Role::kCustomer);
  rfic.weights.assign(n, 1.0);
  for (int i = 0; i < u_count; ++i) {
    rfic.roles[i] = Role::kFacility;
    rfic.weights[i] = 0.0;
  }
  rfic.budget = u_count - bipartite.k;
  rfic.kind = ProblemKind::kFacilityInterdiction;

  const TreeSolveResult solved = SolveTreeRfic(rfic);
  std::vector<char> removed(u_count, 0);
  int removed_count = 0;
  for (NodeId f : solved.solution.removed_facilities) {
    removed[f] = 1;
    ++removed_count;
  }
  for (int i = u_count - 1; i >= 0 && removed_count < rfic.budget; --i) {
    if (!removed[i]) {
      removed[i] = 1;
      ++removed_count;
    }
  }

  SsbveResult result;
  std::vector<char> hit(bipartite.right_count, 0);
  for (int i = 0; i < u_count; ++i) {
    if (!removed[i]) result.subset.push_back(i);
  }
  for (const auto& [u, v] : bipartite.edges) {
    if (!removed[u] && !hit[v]) {
      hit[v] = 1;
      ++result.neighborhood;
    }
  }
  return result;
}

BipRficReduction ToBipRfic(const Instance& instance) {
  if (instance.kind != ProblemKind::kFacilityInterdiction) {
    throw Error(ErrorCode::kWrongKind,
                "bipartite normal form needs a facility interdiction instance");
  }
  const Graph& g = instance.graph;
  const int n = g.node_count();
  BipRficReduction out;
  out.node_map.assign(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_facility(v)) out.node_map[v] = out.facility_count++;
  }

  // Label customer components in order of their smallest id.
  int next = out.facility_count;
  std::vector<double> weight;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (instance.is_facility(s) || out.node_map[s] >= 0) continue;
    const int id = next++;
    weight.push_back(0.0);
    out.node_map[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      weight.back() += instance.weight(v);
      for (const Incidence& inc : g.neighbors(v)) {
        if (instance.is_customer(inc.neighbor) && out.node_map[inc.neighbor] < 0) {
          out.node_map[inc.neighbor] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool fu = instance.is_facility(e.u);
    if (fu == instance.is_facility(e.v)) continue;
    const NodeId facility = out.node_map[fu ? e.u : e.v];
    const NodeId customer = out.node_map[fu ? e.v : e.u];
    edges.push_back({facility, customer});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Instance& bip = out.instance;
  bip.graph = Graph(next, edges);
  bip.roles.assign(next, Role::kCustomer);
  bip.weights.assign(next, 0.0);
  for (int i = 0; i < out.facility_count; ++i) bip.roles[i] = Role::kFacility;
  for (int c = out.facility_count; c < next; ++c) {
    bip.weights[c] = weight[c - out.facility_count];
  }
  bip.budget = instance.budget;
  bip.kind = ProblemKind::kFacilityInterdiction;
  return out;
}

Instance CliqueGadget(const Graph& graph, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  const int n = graph.node_count();
  const int m = graph.edge_count();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    edges.push_back({graph.edge(e).u, n + e});
    edges.push_back({graph.edge(e).v, n + e});
  }
  Instance gadget;
  gadget.graph = Graph(n + m, edges);
  gadget.roles.assign(n + m, Role::kCustomer);
  gadget.weights.assign(n + m, 1.0);
  for (NodeId v = 0; v < n; ++v) {
    gadget.roles[v] = Role::kFacility;
    gadget.weights[v] = 0.0;
  }
  gadget.budget = k;
  gadget.kind = ProblemKind::kFacilityInterdiction;
  return gadget;
}

}  // namespace interdict
