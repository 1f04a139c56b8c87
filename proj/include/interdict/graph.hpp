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

#ifndef INTERDICT_GRAPH_HPP_
#define INTERDICT_GRAPH_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace interdict {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

// Simple undirected graph with dense node ids. Edges are stored with u < v
// in insertion order; the constructor rejects self-loops, duplicates and
// out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::span<const Edge> edges);
  Graph(int node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(NodeId v) const {
    return adjacency_[v];
  }
  int degree(NodeId v) const {
    return static_cast<int>(adjacency_[v].size());
  }

  // Returns the edge id joining u and v, or -1.
  EdgeId find_edge(NodeId u, NodeId v) const;

  // Component id per node (ids dense, in order of smallest member).
  std::vector<int> components(int* count = nullptr) const;
  bool is_connected() const;
  bool is_acyclic() const;
  bool is_tree() const { return is_connected() && is_acyclic(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

enum class Role : std::uint8_t { kFacility, kCustomer };

enum class ProblemKind : std::uint8_t { kEdgeInterdiction, kFacilityInterdiction };

std::string_view ProblemKindName(ProblemKind kind);

// An interdiction instance. weights[v] is meaningful only for customers and is
// held at 0 for facilities.
struct Instance {
  Graph graph;
  std::vector<Role> roles;
  std::vector<double> weights;
  int budget = 0;
  ProblemKind kind = ProblemKind::kEdgeInterdiction;

  int node_count() const { return graph.node_count(); }
  bool is_facility(NodeId v) const { return roles[v] == Role::kFacility; }
  bool is_customer(NodeId v) const { return roles[v] == Role::kCustomer; }
  double weight(NodeId v) const { return is_customer(v) ? weights[v] : 0.0; }
  std::vector<NodeId> facilities() const;
  std::vector<NodeId> customers() const;
  double total_customer_weight() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct CoverageReport {
  std::vector<NodeId> covered;
  std::vector<NodeId> disconnected;
  double disconnected_weight = 0.0;
};

// A removal strategy together with its value. Exactly one of the removal
// vectors is used, according to the instance kind. All vectors are sorted.
struct Solution {
  std::vector<EdgeId> removed_edges;
  std::vector<NodeId> removed_facilities;
  double objective = 0.0;
  std::vector<NodeId> disconnected;

  std::span<const int> removed(ProblemKind kind) const {
    return kind == ProblemKind::kEdgeInterdiction ? removed_edges
                                                  : removed_facilities;
  }
};

// Scores a removal set: edge ids for edge interdiction, facility node ids for
// facility interdiction. Removed facilities are deleted with their incident
// edges. Duplicates in `removed` are ignored.
CoverageReport EvaluateStrategy(const Instance& instance,
                                std::span<const int> removed);

// Builds a Solution whose objective and disconnected set come from
// EvaluateStrategy.
Solution MakeSolution(const Instance& instance, std::vector<int> removed);

// Customers whose deletion leaves >= 3 components that contain a facility.
int CountCustomerJoints(const Instance& instance);

enum class ViolationKind {
  kRoleCountMismatch,
  kWeightCountMismatch,
  kNegativeWeight,
  kNonFiniteWeight,
  kNegativeBudget,
  kNotConnected,
  kNotATree,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int node = -1;
  std::string message;
};

// Empty iff the instance is well formed. With `for_tree_solver`, connectivity
// and acyclicity are also checked and reported as their own classes.
std::vector<Violation> ValidateInstance(const Instance& instance,
                                        bool for_tree_solver = false);

}  // namespace interdict

#endif  // INTERDICT_GRAPH_HPP_
