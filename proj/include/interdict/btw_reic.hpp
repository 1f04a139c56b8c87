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

#ifndef INTERDICT_BTW_REIC_HPP_
#define INTERDICT_BTW_REIC_HPP_

#include <cstdint>
#include <vector>

#include "interdict/dp_value.hpp"
#include "interdict/graph.hpp"
#include "interdict/treewidth.hpp"

namespace interdict {

// Bags above this size are rejected with kTooLarge.
inline constexpr int kMaxBtwBagSize = 20;

// Values V(t, b, f) of one decomposition node for every labeling f of its
// sorted bag and every budget b in [0, budget]. Bit i of f labels bag[i]:
// 1 means "assumed linked to a facility", 0 means "cut off". A state counts
// the weight of 0-labeled customers among the vertices introduced so far,
// using at most b removals.
struct BtwStates {
  std::vector<NodeId> bag;
  int budget = 0;
  std::vector<DpValue> values;  // index f * (budget + 1) + b

  BtwStates() = default;
  BtwStates(std::vector<NodeId> sorted_bag, int budget);

  std::uint32_t labeling_count() const { return 1u << bag.size(); }
  DpValue value(std::uint32_t f, int b) const {
    return values[static_cast<size_t>(f) * (budget + 1) + b];
  }
  DpValue& at(std::uint32_t f, int b) {
    return values[static_cast<size_t>(f) * (budget + 1) + b];
  }
};

struct BtwDpTable {
  int budget = 0;
  std::vector<BtwStates> nodes;  // parallel to NiceDecomposition::nodes
  // Per node, same indexing as `values`: the forgotten vertex's label at
  // forget nodes, the left child's budget at join nodes, -1 elsewhere.
  std::vector<std::vector<std::int32_t>> decisions;

  size_t state_count() const;
};

struct BtwSolveResult {
  Solution solution;
  BtwDpTable table;
};

// Edge interdiction on bounded-treewidth graphs in O(k 2^k n r^2) for an
// extended nice decomposition of width k. The optimum is
// V(root, r, empty labeling); removed edges are the edges introduced with
// mismatched endpoint labels along the optimal states.
//
// Throws kWrongKind, kInvalidArgument for a malformed instance,
// kInvalidDecomposition when `nice` does not validate against the graph and
// kTooLarge when a bag exceeds kMaxBtwBagSize.
BtwSolveResult SolveBtwReic(const Instance& instance,
                            const NiceDecomposition& nice);

// Same, on ToExtendedNice(AutoDecomposition(instance.graph)).
BtwSolveResult SolveBtwReic(const Instance& instance);

// Join step: for each f and b, the best left(b1, f) + right(b - b1, f) over
// 0 <= b1 <= b, minus the weight of customers labeled 0 in f, which both
// sides count. Ties keep the smallest b1; when `split` is non-null it
// receives b1 per state (-1 where infeasible). Throws kBagMismatch when the
// bags differ and kInvalidArgument when the budgets differ.
BtwStates JoinMerge(const BtwStates& left, const BtwStates& right,
                    const Instance& instance,
                    std::vector<std::int32_t>* split = nullptr);

}  // namespace interdict

#endif  // INTERDICT_BTW_REIC_HPP_
