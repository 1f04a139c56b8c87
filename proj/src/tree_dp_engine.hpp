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

#ifndef INTERDICT_SRC_TREE_DP_ENGINE_HPP_
#define INTERDICT_SRC_TREE_DP_ENGINE_HPP_

#include <vector>

#include "interdict/graph.hpp"
#include "interdict/tree_dp.hpp"

namespace interdict::internal {

// One way of treating a child: the child's condition and whether the edge to
// it is cut (costing one budget unit on top of the child's own budget).
struct Candidate {
  Condition condition;
  bool cut = false;
};

struct ChildOptionValue {
  DpValue value;
  Condition condition = Condition::k00;
  bool cut = false;
};

// Best candidate per child budget 0..r. Candidates are tried in order and
// replaced only on strict improvement.
std::vector<ChildOptionValue> EvaluateCandidates(
    const TreeDpTable& table, NodeId child,
    const std::vector<Candidate>& candidates);

// How one storage slot of a node is computed from its children.
struct SlotRule {
  bool infeasible = false;
  // Added to every finite value (the node's own weight when it is counted).
  double bonus = 0.0;
  // Budget consumed by the node itself before partitioning among children.
  int shift = 0;
  // Options for each child; for a constrained slot these are the z = 0
  // options.
  std::vector<Candidate> options;
  // Non-empty for a constrained slot: options that route the node to a
  // facility through the child (z = 1). At least one child must take one.
  std::vector<Candidate> linked_options;
};

// Fills values and child states of node v for one slot. All children of v
// must already be complete.
void SolveSlot(TreeDpTable& table, NodeId v, int slot, const SlotRule& rule);

}  // namespace interdict::internal

#endif  // INTERDICT_SRC_TREE_DP_ENGINE_HPP_
