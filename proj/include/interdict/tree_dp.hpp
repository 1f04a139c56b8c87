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

#ifndef INTERDICT_TREE_DP_HPP_
#define INTERDICT_TREE_DP_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "interdict/dp_value.hpp"
#include "interdict/graph.hpp"

namespace interdict {

// Per-node DP context. X: a facility is reachable through the parent.
// Y: a facility is reachable inside the node's own subtree.
enum class Condition : std::uint8_t { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

std::string_view ConditionName(Condition c);

// A tree rooted at a fixed node with children kept in adjacency order.
class RootedTree {
 public:
  // Throws kNotConnected / kNotATree unless `graph` is a tree.
  RootedTree(const Graph& graph, NodeId root);

  int node_count() const { return static_cast<int>(parent_.size()); }
  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  EdgeId parent_edge(NodeId v) const { return parent_edge_[v]; }
  std::span<const NodeId> children(NodeId v) const {
    return {children_.data() + child_begin_[v],
            children_.data() + child_begin_[v + 1]};
  }
  // Offset of v's first child in a flat array indexed by (parent, child slot).
  int child_offset(NodeId v) const { return child_begin_[v]; }
  // Nodes ordered so that every child precedes its parent.
  const std::vector<NodeId>& post_order() const { return post_order_; }

 private:
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> child_begin_;
  std::vector<NodeId> children_;
  std::vector<NodeId> post_order_;
};

// The state a parent's optimum assigns to one child.
struct ChildState {
  std::int32_t budget = -1;
  Condition condition = Condition::k00;
  // Edge interdiction: the edge to the parent is cut. Facility interdiction
  // never sets it.
  bool removed = false;
};

// Values V_XY(v, b) for every node, condition and budget 0..r, plus for
// every finite state the child states realizing it. V_01 and V_11 share one
// stored array. Values follow at-most-b budget semantics.
class TreeDpTable {
 public:
  TreeDpTable(RootedTree tree, int budget);

  const RootedTree& tree() const { return tree_; }
  int budget() const { return budget_; }

  DpValue value(NodeId v, Condition c, int b) const {
    return values(v, c)[b];
  }
  std::span<const DpValue> values(NodeId v, Condition c) const {
    return {values_.data() + ValueIndex(v, Slot(c), 0),
            static_cast<size_t>(budget_ + 1)};
  }
  // One entry per child of v in tree order. Entries of infeasible states
  // carry budget -1.
  std::span<const ChildState> child_states(NodeId v, Condition c,
                                           int b) const {
    const size_t k = tree_.children(v).size();
    return {states_.data() + StateIndex(v, Slot(c), b), k};
  }

  // Number of stored DP values and child-state records.
  size_t value_entry_count() const { return values_.size(); }
  size_t state_entry_count() const { return states_.size(); }

  // Builder access used by the solvers.
  std::span<DpValue> mutable_values(NodeId v, int slot) {
    return {values_.data() + ValueIndex(v, slot, 0),
            static_cast<size_t>(budget_ + 1)};
  }
  std::span<ChildState> mutable_child_states(NodeId v, int slot, int b) {
    const size_t k = tree_.children(v).size();
    return {states_.data() + StateIndex(v, slot, b), k};
  }

  // Storage slot per condition: 00 -> 0, 10 -> 1, 01/11 -> 2.
  static int Slot(Condition c) {
    switch (c) {
      case Condition::k00: return 0;
      case Condition::k10: return 1;
      default: return 2;
    }
  }
  static constexpr int kSlots = 3;

 private:
  size_t ValueIndex(NodeId v, int slot, int b) const {
    return (static_cast<size_t>(v) * kSlots + slot) * (budget_ + 1) + b;
  }
  size_t StateIndex(NodeId v, int slot, int b) const {
    const size_t k = tree_.children(v).size();
    return static_cast<size_t>(tree_.child_offset(v)) * kSlots *
               (budget_ + 1) +
           (static_cast<size_t>(slot) * (budget_ + 1) + b) * k;
  }

  RootedTree tree_;
  int budget_;
  std::vector<DpValue> values_;
  std::vector<ChildState> states_;
};

struct TreeSolveResult {
  Solution solution;
  TreeDpTable table;
  Condition root_condition;
};

}  // namespace interdict

#endif  // INTERDICT_TREE_DP_HPP_
