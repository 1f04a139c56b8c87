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

#include "interdict/tree_reic.hpp"

#include <algorithm>
#include <utility>

#include "interdict/error.hpp"
#include "tree_dp_engine.hpp"
#include "tree_solve_common.hpp"

namespace interdict {

namespace {

using internal::Candidate;
using internal::SlotRule;

std::vector<Candidate> Candidates(ReicContext context) {
  switch (context) {
    case ReicContext::kCustomer00:
      return {{Condition::k00, false}, {Condition::k01, true}};
    case ReicContext::kCustomer10:
      return {{Condition::k10, false},
              {Condition::k00, true},
              {Condition::k01, true}};
    case ReicContext::kFacilityX1:
      // V_01(u, b-1) = V_11(u, b-1) <= V_11(u, b), so cutting towards a
      // linked child never helps.
      return {{Condition::k10, false},
              {Condition::k11, false},
              {Condition::k00, true}};
    case ReicContext::kCustomerX1Linked:
      return {{Condition::k11, false}};
  }
  return {};
}

void SolveNode(const Instance& instance, TreeDpTable& table, NodeId v) {
  SlotRule rule00;
  SlotRule rule10;
  SlotRule rule_x1;
  if (instance.is_facility(v)) {
    // A facility always reaches itself, so Y=0 is impossible.
    rule00.infeasible = true;
    rule10.infeasible = true;
    rule_x1.options = Candidates(ReicContext::kFacilityX1);
  } else {
    rule00.bonus = instance.weights[v];
    rule00.options = Candidates(ReicContext::kCustomer00);
    rule10.options = Candidates(ReicContext::kCustomer10);
    rule_x1.options = Candidates(ReicContext::kCustomer10);
    rule_x1.linked_options = Candidates(ReicContext::kCustomerX1Linked);
  }
  // Leaves fall out of the same rules with zero buckets.
  internal::SolveSlot(table, v, 0, rule00);
  internal::SolveSlot(table, v, 1, rule10);
  internal::SolveSlot(table, v, 2, rule_x1);
}

}  // namespace

std::vector<ChildOption> ReicChildOptions(ReicContext context,
                                          const TreeDpTable& table,
                                          NodeId child) {
  std::vector<ChildOption> out;
  for (const internal::ChildOptionValue& opt :
       internal::EvaluateCandidates(table, child, Candidates(context))) {
    out.push_back({opt.value, opt.condition, opt.cut});
  }
  return out;
}

TreeSolveResult SolveTreeReic(const Instance& instance) {
  internal::CheckTreeInstance(instance, ProblemKind::kEdgeInterdiction);
  TreeDpTable table(RootedTree(instance.graph, 0), instance.budget);
  for (NodeId v : table.tree().post_order()) SolveNode(instance, table, v);

  const Condition best = internal::BestRootCondition(table);
  std::vector<int> removed;
  internal::WalkStates(
      table, best, [](NodeId, Condition, int) {},
      [&](NodeId, NodeId child, const ChildState& state) {
        if (state.removed) removed.push_back(table.tree().parent_edge(child));
      });
  Solution solution = MakeSolution(instance, std::move(removed));
  return {std::move(solution), std::move(table), best};
}

}  // namespace interdict
