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

#include "interdict/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "disjoint_sets.hpp"
#include "interdict/error.hpp"

namespace interdict {

Graph::Graph(int node_count, std::span<const Edge> edges)
    : node_count_(node_count), adjacency_(node_count) {
  if (node_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative node count");
  }
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (find_edge(e.u, e.v) >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
}

EdgeId Graph::find_edge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return -1;
  // Scan the shorter list.
  if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.neighbor == v) return inc.edge;
  }
  return -1;
}

std::vector<int> Graph::components(int* count) const {
  std::vector<int> comp(node_count_, -1);
  std::vector<NodeId> stack;
  int next = 0;
  for (NodeId s = 0; s < node_count_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : adjacency_[v]) {
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool Graph::is_connected() const {
  int count = 0;
  components(&count);
  return count <= 1;
}

bool Graph::is_acyclic() const {
  internal::DisjointSets sets(node_count_);
  for (const Edge& e : edges_) {
    if (!sets.Union(e.u, e.v)) return false;
  }
  return true;
}

std::string_view ProblemKindName(ProblemKind kind) {
  return kind == ProblemKind::kEdgeInterdiction ? "edge" : "facility";
}

std::vector<NodeId> Instance::facilities() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (is_facility(v)) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> Instance::customers() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (is_customer(v)) out.push_back(v);
  }
  return out;
}

double Instance::total_customer_weight() const {
  double total = 0.0;
  for (NodeId v = 0; v < node_count(); ++v) total += weight(v);
  return total;
}

CoverageReport EvaluateStrategy(const Instance& instance,
                                std::span<const int> removed) {
  const Graph& g = instance.graph;
  const int n = g.node_count();
  std::vector<char> edge_removed(g.edge_count(), 0);
  std::vector<char> node_removed(n, 0);
  if (instance.kind == ProblemKind::kEdgeInterdiction) {
    for (int e : removed) {
      if (e < 0 || e >= g.edge_count()) {
        throw Error(ErrorCode::kUnknownEdge,
                    "edge id " + std::to_string(e) + " is not in the graph");
      }
      edge_removed[e] = 1;
    }
  } else {
    for (int v : removed) {
      if (v < 0 || v >= n || !instance.is_facility(v)) {
        throw Error(ErrorCode::kNotAFacility,
                    "node " + std::to_string(v) + " is not a facility");
      }
      node_removed[v] = 1;
    }
  }

  internal::DisjointSets sets(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge_removed[e] || node_removed[edge.u] || node_removed[edge.v]) {
      continue;
    }
    sets.Union(edge.u, edge.v);
  }
  std::vector<char> served(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_facility(v) && !node_removed[v]) served[sets.Find(v)] = 1;
  }

  CoverageReport report;
  for (NodeId v = 0; v < n; ++v) {
    if (!instance.is_customer(v)) continue;
    if (served[sets.Find(v)]) {
      report.covered.push_back(v);
    } else {
      report.disconnected.push_back(v);
      report.disconnected_weight += instance.weights[v];
    }
  }
  return report;
}

Solution MakeSolution(const Instance& instance, std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  CoverageReport report = EvaluateStrategy(instance, removed);
  Solution solution;
  solution.objective = report.disconnected_weight;
  solution.disconnected = std::move(report.disconnected);
  if (instance.kind == ProblemKind::kEdgeInterdiction) {
    solution.removed_edges = std::move(removed);
  } else {
    solution.removed_facilities = std::move(removed);
  }
  return solution;
}

namespace {

// Forest case: one rooted pass per component. Deleting v leaves its child
// subtrees, the rest of its own component, and every other component.
int CountJointsInForest(const Instance& instance) {
  const Graph& g = instance.graph;
  const int n = g.node_count();
  int comp_count = 0;
  const std::vector<int> comp = g.components(&comp_count);
  std::vector<int> comp_facilities(comp_count, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_facility(v)) ++comp_facilities[comp[v]];
  }
  int facility_components = 0;
  for (int c : comp_facilities) facility_components += c > 0 ? 1 : 0;

  std::vector<NodeId> parent(n, -1);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    const size_t begin = order.size();
    order.push_back(root);
    for (size_t i = begin; i < order.size(); ++i) {
      const NodeId v = order[i];
      for (const Incidence& inc : g.neighbors(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          parent[inc.neighbor] = v;
          order.push_back(inc.neighbor);
        }
      }
    }
  }
  std::vector<int> below(n, 0);
  std::vector<int> facility_children(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (instance.is_facility(v)) ++below[v];
    if (parent[v] >= 0) {
      below[parent[v]] += below[v];
      if (below[v] > 0) ++facility_children[parent[v]];
    }
  }

  int joints = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (!instance.is_customer(v)) continue;
    const int own = comp_facilities[comp[v]];
    int count = facility_children[v];
    if (own - below[v] > 0) ++count;
    count += facility_components - (own > 0 ? 1 : 0);
    if (count >= 3) ++joints;
  }
  return joints;
}

int CountJointsByDeletion(const Instance& instance) {
  const Graph& g = instance.graph;
  const int n = g.node_count();
  int joints = 0;
  for (NodeId x = 0; x < n; ++x) {
    if (!instance.is_customer(x)) continue;
    internal::DisjointSets sets(n);
    for (const Edge& e : g.edges()) {
      if (e.u != x && e.v != x) sets.Union(e.u, e.v);
    }
    std::vector<char> marked(n, 0);
    int count = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (v == x || !instance.is_facility(v)) continue;
      const int root = sets.Find(v);
      if (!marked[root]) {
        marked[root] = 1;
        ++count;
      }
    }
    if (count >= 3) ++joints;
  }
  return joints;
}

}  // namespace

int CountCustomerJoints(const Instance& instance) {
  if (instance.graph.is_acyclic()) return CountJointsInForest(instance);
  return CountJointsByDeletion(instance);
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kRoleCountMismatch: return "RoleCountMismatch";
    case ViolationKind::kWeightCountMismatch: return "WeightCountMismatch";
    case ViolationKind::kNegativeWeight: return "NegativeWeight";
    case ViolationKind::kNonFiniteWeight: return "NonFiniteWeight";
    case ViolationKind::kNegativeBudget: return "NegativeBudget";
    case ViolationKind::kNotConnected: return "NotConnected";
    case ViolationKind::kNotATree: return "NotATree";
  }
  return "Unknown";
}

std::vector<Violation> ValidateInstance(const Instance& instance,
                                        bool for_tree_solver) {
  std::vector<Violation> out;
  const int n = instance.node_count();
  if (static_cast<int>(instance.roles.size()) != n) {
    out.push_back({ViolationKind::kRoleCountMismatch, -1,
                   "expected " + std::to_string(n) + " roles, got " +
                       std::to_string(instance.roles.size())});
  }
  if (static_cast<int>(instance.weights.size()) != n) {
    out.push_back({ViolationKind::kWeightCountMismatch, -1,
                   "expected " + std::to_string(n) + " weights, got " +
                       std::to_string(instance.weights.size())});
  }
  if (out.empty()) {
    for (NodeId v = 0; v < n; ++v) {
      if (!instance.is_customer(v)) continue;
      const double w = instance.weights[v];
      if (!std::isfinite(w)) {
        out.push_back({ViolationKind::kNonFiniteWeight, v,
                       "customer " + std::to_string(v) + " weight not finite"});
      } else if (w < 0) {
        out.push_back({ViolationKind::kNegativeWeight, v,
                       "customer " + std::to_string(v) + " has weight " +
                           std::to_string(w)});
      }
    }
  }
  if (instance.budget < 0) {
    out.push_back({ViolationKind::kNegativeBudget, -1, "budget is negative"});
  }
  if (for_tree_solver) {
    if (!instance.graph.is_connected()) {
      out.push_back({ViolationKind::kNotConnected, -1,
                     "graph is not connected"});
    }
    if (!instance.graph.is_acyclic()) {
      out.push_back({ViolationKind::kNotATree, -1, "graph contains a cycle"});
    }
  }
  return out;
}

}  // namespace interdict
