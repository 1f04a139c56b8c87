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

#ifndef INTERDICT_TREE_REIC_HPP_
#define INTERDICT_TREE_REIC_HPP_

#include <span>
#include <vector>

#include "interdict/dp_value.hpp"
#include "interdict/graph.hpp"
#include "interdict/tree_dp.hpp"

namespace interdict {

// Edge interdiction on trees in O(n r^2).
//
// Every node v (rooted at node 0) stores V_XY(v, b), the largest weight of
// disconnected customers inside v's subtree under condition XY with at most
// b removals. A node combines its children through a multiple-choice
// knapsack over their budgets; the customer X1 case needs the constrained
// variant since at least one child has to keep v linked to a facility.
// The optimum is the best condition at the root with budget r; removed edges
// are recovered from the stored child states.
//
// Throws kWrongKind, kNotConnected, kNotATree, or kInvalidArgument for a
// malformed instance.
TreeSolveResult SolveTreeReic(const Instance& instance);

// The option sets a parent offers each child, one per parent case.
enum class ReicContext {
  kCustomer00,       // parent customer, X=0 Y=0
  kCustomer10,       // parent customer, X=1 Y=0; also z=0 under customer X1
  kFacilityX1,       // parent facility, Y=1
  kCustomerX1Linked  // parent customer reaches a facility via this child
};

struct ChildOption {
  DpValue value;
  Condition child_condition = Condition::k00;
  bool edge_removed = false;
};

// Best option per child budget b in [0, table.budget()] for `child` under the
// parent case `context`. Cutting the edge spends one unit, so cut options are
// unavailable at b = 0. Ties prefer keeping the edge.
std::vector<ChildOption> ReicChildOptions(ReicContext context,
                                          const TreeDpTable& table,
                                          NodeId child);

}  // namespace interdict

#endif  // INTERDICT_TREE_REIC_HPP_
