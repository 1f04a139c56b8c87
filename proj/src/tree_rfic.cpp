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

#include "interdict/tree_rfic.hpp"

#include <utility>
#include <vector>

#include "tree_dp_engine.hpp"
#include "tree_solve_common.hpp"

namespace interdict {

namespace {

using internal::SlotRule;

void SolveNode(const Instance& instance, TreeDpTable& table, NodeId v) {
  SlotRule rule00;
  SlotRule rule10;
  SlotRule rule_x1;
  if (instance.is_facility(v)) {
    // Y=0 means v itself is removed: children lose their route through v.
    for (SlotRule* rule : {&rule00, &rule10}) {
      rule->shift = 1;
      rule->options = {{Condition::k00}, {Condition::k01}};
    }
    rule_x1.options = {{Condition::k10}, {Condition::k11}};
  } else {
    rule00.bonus = instance.weights[v];
    rule00.options = {{Condition::k00}};
    rule10.options = {{Condition::k10}};
    rule_x1.options = {{Condition::k10}};
    rule_x1.linked_options = {{Condition::k11}};
  }
  internal::SolveSlot(table, v, 0, rule00);
  internal::SolveSlot(table, v, 1, rule10);
  internal::SolveSlot(table, v, 2, rule_x1);
}

bool HasY0(Condition c) { return c == Condition::k00 || c == Condition::k10; }

}  // namespace

TreeSolveResult SolveTreeRfic(const Instance& instance) {
  internal::CheckTreeInstance(instance, ProblemKind::kFacilityInterdiction);
  TreeDpTable table(RootedTree(instance.graph, 0), instance.budget);
  for (NodeId v : table.tree().post_order()) SolveNode(instance, table, v);

  const Condition best = internal::BestRootCondition(table);
  std::vector<int> removed;
  internal::WalkStates(
      table, best,
      [&](NodeId v, Condition c, int) {
        if (instance.is_facility(v) && HasY0(c)) removed.push_back(v);
      },
      [](NodeId, NodeId, const ChildState&) {});
  Solution solution = MakeSolution(instance, std::move(removed));
  return {std::move(solution), std::move(table), best};
}

}  // namespace interdict
