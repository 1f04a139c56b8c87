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

#include <string>

#include "interdict/error.hpp"
#include "interdict/knapsack.hpp"
#include "interdict/tree_dp.hpp"
#include "tree_dp_engine.hpp"

namespace interdict {

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::k00: return "00";
    case Condition::k01: return "01";
    case Condition::k10: return "10";
    case Condition::k11: return "11";
  }
  return "??";
}

RootedTree::RootedTree(const Graph& graph, NodeId root) : root_(root) {
  const int n = graph.node_count();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  if (root < 0 || root >= n) {
    throw Error(ErrorCode::kInvalidArgument, "root out of range");
  }
  if (!graph.is_connected()) {
    throw Error(ErrorCode::kNotConnected, "graph is not connected");
  }
  if (graph.edge_count() != n - 1) {
    throw Error(ErrorCode::kNotATree, "connected graph has a cycle");
  }
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  std::vector<NodeId> bfs;
  bfs.reserve(n);
  std::vector<char> seen(n, 0);
  bfs.push_back(root);
  seen[root] = 1;
  for (size_t i = 0; i < bfs.size(); ++i) {
    const NodeId v = bfs[i];
    for (const Incidence& inc : graph.neighbors(v)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      parent_[inc.neighbor] = v;
      parent_edge_[inc.neighbor] = inc.edge;
      bfs.push_back(inc.neighbor);
    }
  }
  child_begin_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (parent_[v] >= 0) ++child_begin_[parent_[v] + 1];
  }
  for (NodeId v = 0; v < n; ++v) child_begin_[v + 1] += child_begin_[v];
  children_.resize(n - 1);
  std::vector<int> fill(child_begin_.begin(), child_begin_.end() - 1);
  // Adjacency order of the parent.
  for (NodeId v = 0; v < n; ++v) {
    for (const Incidence& inc : graph.neighbors(v)) {
      if (parent_[inc.neighbor] == v && parent_edge_[inc.neighbor] == inc.edge) {
        children_[fill[v]++] = inc.neighbor;
      }
    }
  }
  post_order_.assign(bfs.rbegin(), bfs.rend());
}

TreeDpTable::TreeDpTable(RootedTree tree, int budget)
    : tree_(std::move(tree)), budget_(budget) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "negative budget");
  const size_t n = tree_.node_count();
  values_.assign(n * kSlots * (budget_ + 1), DpValue::NegInfinity());
  states_.assign(static_cast<size_t>(n - 1) * kSlots * (budget_ + 1),
                 ChildState{});
}

namespace internal {

std::vector<ChildOptionValue> EvaluateCandidates(
    const TreeDpTable& table, NodeId child,
    const std::vector<Candidate>& candidates) {
  const int r = table.budget();
  std::vector<ChildOptionValue> out(r + 1);
  for (const Candidate& cand : candidates) {
    const std::span<const DpValue> vals = table.values(child, cand.condition);
    const int offset = cand.cut ? 1 : 0;
    for (int b = offset; b <= r; ++b) {
      const DpValue x = vals[b - offset];
      if (x > out[b].value) out[b] = {x, cand.condition, cand.cut};
    }
  }
  return out;
}

void SolveSlot(TreeDpTable& table, NodeId v, int slot, const SlotRule& rule) {
  const int r = table.budget();
  std::span<DpValue> values = table.mutable_values(v, slot);
  if (rule.infeasible) {
    std::fill(values.begin(), values.end(), DpValue::NegInfinity());
    return;
  }
  const std::span<const NodeId> children = table.tree().children(v);
  const bool constrained = !rule.linked_options.empty();

  // Per child, the option behind each item index: [0, r] plain options by
  // child budget, [r+1, 2r+1] linked options.
  std::vector<std::vector<ChildOptionValue>> options(children.size());
  KnapsackTable knapsack(r, constrained);
  KnapsackBucket bucket;
  for (size_t i = 0; i < children.size(); ++i) {
    std::vector<ChildOptionValue>& opts = options[i];
    opts = EvaluateCandidates(table, children[i], rule.options);
    if (constrained) {
      std::vector<ChildOptionValue> linked =
          EvaluateCandidates(table, children[i], rule.linked_options);
      opts.insert(opts.end(), linked.begin(), linked.end());
    }
    bucket.clear();
    for (size_t j = 0; j < opts.size(); ++j) {
      const int cost = static_cast<int>(j) % (r + 1);
      bucket.push_back({cost, opts[j].value, j > static_cast<size_t>(r)});
    }
    knapsack.Fold(bucket);
  }

  for (int b = 0; b <= r; ++b) {
    const int inner = b - rule.shift;
    if (inner < 0 || !knapsack.value(inner).is_finite()) {
      values[b] = DpValue::NegInfinity();
      continue;
    }
    values[b] = knapsack.value(inner) + rule.bonus;
    const std::vector<int> picked = knapsack.Reconstruct(inner);
    std::span<ChildState> states = table.mutable_child_states(v, slot, b);
    for (size_t i = 0; i < children.size(); ++i) {
      const ChildOptionValue& opt = options[i][picked[i]];
      const int child_budget = picked[i] % (r + 1);
      states[i] = {child_budget - (opt.cut ? 1 : 0), opt.condition, opt.cut};
    }
  }
}

}  // namespace internal
}  // namespace interdict
