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

#ifndef INTERDICT_REDUCTIONS_HPP_
#define INTERDICT_REDUCTIONS_HPP_

#include <utility>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// Bipartite graph with left side U = {0..left_count-1} and right side
// V = {0..right_count-1}, plus a target size k for subsets of U.
struct BipartiteInstance {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;  // (left index, right index)
  int k = 0;

  // Left vertex i is node i, right vertex j is node left_count + j.
  Graph underlying_graph() const;
};

struct SsbveResult {
  std::vector<int> subset;  // sorted left indices, exactly k of them
  int neighborhood = 0;     // |N(subset)|
};

// Smallest-neighbourhood k-subset of U when the underlying graph is a tree.
// Solved as facility interdiction with facilities U, unit-weight customers V
// and budget |U| - k: the removed facilities are U minus the subset. When
// fewer than |U| - k removals are optimal, the highest-indexed remaining
// left vertices are removed as well. O(n (n - k)^2).
//
// Throws kBadK unless 0 <= k <= |U|, kInvalidArgument for an edge outside
// the two sides, and kNotATree when the underlying graph is not a tree.
SsbveResult SolveSsbveTree(const BipartiteInstance& bipartite);

struct BipRficReduction {
  // Facilities come first in source id order, then one customer per
  // component of the graph without its facilities, ordered by the smallest
  // source id in the component. Weights are summed per component.
  Instance instance;
  std::vector<NodeId> node_map;  // source node -> output node
  int facility_count = 0;        // output nodes [0, facility_count) are U
};

// Equivalent bipartite instance: every facility subset R scores the same in
// both. Throws kWrongKind unless `instance` is a facility interdiction
// instance.
BipRficReduction ToBipRfic(const Instance& instance);

// Facility interdiction instance with facilities V(G) (same ids) and one
// unit-weight customer |V(G)| + e per edge e adjacent to its endpoints.
// Budget k; the optimum is k(k-1)/2 iff G has a k-clique.
Instance CliqueGadget(const Graph& graph, int k);

}  // namespace interdict

#endif  // INTERDICT_REDUCTIONS_HPP_
