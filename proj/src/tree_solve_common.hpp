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

#ifndef INTERDICT_SRC_TREE_SOLVE_COMMON_HPP_
#define INTERDICT_SRC_TREE_SOLVE_COMMON_HPP_

#include <string>
#include <utility>
#include <vector>

#include "interdict/error.hpp"
#include "interdict/graph.hpp"
#include "interdict/tree_dp.hpp"

namespace interdict::internal {

inline void CheckTreeInstance(const Instance& instance, ProblemKind kind) {
  if (instance.kind != kind) {
    throw Error(ErrorCode::kWrongKind,
                "solver expects a " + std::string(ProblemKindName(kind)) +
                    " interdiction instance");
  }
  for (const Violation& violation : ValidateInstance(instance)) {
    throw Error(ErrorCode::kInvalidArgument, violation.message);
  }
}

// Conditions tried in order 00, 01, 10, 11; a later one wins only on strict
// improvement, so X=0 is preferred at the root.
inline Condition BestRootCondition(const TreeDpTable& table) {
  const NodeId root = table.tree().root();
  const int r = table.budget();
  Condition best = Condition::k00;
  for (Condition c : {Condition::k01, Condition::k10, Condition::k11}) {
    if (table.value(root, c, r) > table.value(root, best, r)) best = c;
  }
  return best;
}

// Top-down walk over the states chosen by the optimum at (root, best, r).
// Calls on_node(v, condition, budget) for every node and
// on_child(parent, child, state) for every tree edge.
template <typename OnNode, typename OnChild>
void WalkStates(const TreeDpTable& table, Condition root_condition,
                OnNode&& on_node, OnChild&& on_child) {
  struct Frame {
    NodeId node;
    Condition condition;
    int budget;
  };
  const NodeId root = table.tree().root();
  if (!table.value(root, root_condition, table.budget()).is_finite()) {
    throw Error(ErrorCode::kInfeasible, "root state is infeasible");
  }
  std::vector<Frame> stack{{root, root_condition, table.budget()}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    on_node(f.node, f.condition, f.budget);
    const std::span<const NodeId> children = table.tree().children(f.node);
    const std::span<const ChildState> states =
        table.child_states(f.node, f.condition, f.budget);
    for (size_t i = 0; i < children.size(); ++i) {
      on_child(f.node, children[i], states[i]);
      stack.push_back({children[i], states[i].condition, states[i].budget});
    }
  }
}

}  // namespace interdict::internal

#endif  // INTERDICT_SRC_TREE_SOLVE_COMMON_HPP_
