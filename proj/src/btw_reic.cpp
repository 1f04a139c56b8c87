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

#include "interdict/btw_reic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interdict/error.hpp"

namespace interdict {

namespace {

// Total DP entries allowed across all nodes.
constexpr size_t kMaxStates = size_t{1} << 28;

int Position(const std::vector<NodeId>& bag, NodeId v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Labeling with a new bit `bit` inserted at position p.
std::uint32_t InsertBit(std::uint32_t f, int p, std::uint32_t bit) {
  const std::uint32_t low = f & ((1u << p) - 1);
  return ((f >> p) << (p + 1)) | (bit << p) | low;
}

std::uint32_t RemoveBit(std::uint32_t f, int p) {
  const std::uint32_t low = f & ((1u << p) - 1);
  return ((f >> (p + 1)) << p) | low;
}

void CheckInstance(const Instance& instance) {
  if (instance.kind != ProblemKind::kEdgeInterdiction) {
    throw Error(ErrorCode::kWrongKind, "solver expects an edge interdiction instance");
  }
  for (const Violation& violation : ValidateInstance(instance)) {
    throw Error(ErrorCode::kInvalidArgument, violation.message);
  }
}

void IntroduceVertex(const Instance& instance, const NiceNode& node,
                     const BtwStates& child, BtwStates& out) {
  const int p = Position(node.bag, node.vertex);
  const bool facility = instance.is_facility(node.vertex);
  const double w = instance.weight(node.vertex);
  for (std::uint32_t f = 0; f < out.labeling_count(); ++f) {
    const bool linked = (f >> p) & 1u;
    const std::uint32_t g = RemoveBit(f, p);
    for (int b = 0; b <= out.budget; ++b) {
      if (linked) {
        out.at(f, b) = child.value(g, b);
      } else if (facility) {
        out.at(f, b) = DpValue::NegInfinity();
      } else {
        out.at(f, b) = child.value(g, b) + w;
      }
    }
  }
}

void IntroduceEdge(const Instance& instance, const NiceNode& node,
                   const BtwStates& child, BtwStates& out) {
  const Edge& e = instance.graph.edge(node.edge);
  const int pu = Position(node.bag, e.u);
  const int pv = Position(node.bag, e.v);
  for (std::uint32_t f = 0; f < out.labeling_count(); ++f) {
    const bool cut = ((f >> pu) & 1u) != ((f >> pv) & 1u);
    for (int b = 0; b <= out.budget; ++b) {
      if (!cut) {
        out.at(f, b) = child.value(f, b);
      } else {
        out.at(f, b) = b == 0 ? DpValue::NegInfinity() : child.value(f, b - 1);
      }
    }
  }
}

void Forget(const NiceNode& node, const BtwStates& child, BtwStates& out,
            std::vector<std::int32_t>& decision) {
  const int p = Position(child.bag, node.vertex);
  for (std::uint32_t f = 0; f < out.labeling_count(); ++f) {
    const std::uint32_t g0 = InsertBit(f, p, 0);
    const std::uint32_t g1 = InsertBit(f, p, 1);
    for (int b = 0; b <= out.budget; ++b) {
      const DpValue v0 = child.value(g0, b);
      const DpValue v1 = child.value(g1, b);
      const bool pick_one = v1 > v0;
      out.at(f, b) = pick_one ? v1 : v0;
      decision[static_cast<size_t>(f) * (out.budget + 1) + b] = pick_one ? 1 : 0;
    }
  }
}

}  // namespace

BtwStates::BtwStates(std::vector<NodeId> sorted_bag, int budget)
    : bag(std::move(sorted_bag)), budget(budget) {
  values.assign(static_cast<size_t>(labeling_count()) * (budget + 1),
                DpValue::NegInfinity());
}

size_t BtwDpTable::state_count() const {
  size_t total = 0;
  for (const BtwStates& s : nodes) total += s.values.size();
  return total;
}

BtwStates JoinMerge(const BtwStates& left, const BtwStates& right,
                    const Instance& instance, std::vector<std::int32_t>* split) {
  if (left.bag != right.bag) {
    throw Error(ErrorCode::kBagMismatch, "join children have different bags");
  }
  if (left.budget != right.budget) {
    throw Error(ErrorCode::kInvalidArgument, "join children have different budgets");
  }
  BtwStates out(left.bag, left.budget);
  if (split != nullptr) split->assign(out.values.size(), -1);
  const int r = out.budget;
  for (std::uint32_t f = 0; f < out.labeling_count(); ++f) {
    double twice_counted = 0.0;
    for (size_t i = 0; i < out.bag.size(); ++i) {
      if (!((f >> i) & 1u)) twice_counted += instance.weight(out.bag[i]);
    }
    for (int b = 0; b <= r; ++b) {
      DpValue best = DpValue::NegInfinity();
      int best_b1 = -1;
      for (int b1 = 0; b1 <= b; ++b1) {
        const DpValue v = left.value(f, b1) + right.value(f, b - b1);
        if (v.is_finite() && (best_b1 < 0 || v > best)) {
          best = v;
          best_b1 = b1;
        }
      }
      out.at(f, b) = best - twice_counted;
      if (split != nullptr) (*split)[static_cast<size_t>(f) * (r + 1) + b] = best_b1;
    }
  }
  return out;
}

BtwSolveResult SolveBtwReic(const Instance& instance, const NiceDecomposition& nice) {
  CheckInstance(instance);
  const auto problems = ValidateNice(instance.graph, nice);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidDecomposition, problems.front());
  }
  const int r = instance.budget;
  size_t total = 0;
  for (const NiceNode& node : nice.nodes) {
    if (static_cast<int>(node.bag.size()) > kMaxBtwBagSize) {
      throw Error(ErrorCode::kTooLarge,
                  "bag of size " + std::to_string(node.bag.size()) +
                      " exceeds the limit of " + std::to_string(kMaxBtwBagSize));
    }
    total += (size_t{1} << node.bag.size()) * (static_cast<size_t>(r) + 1);
  }
  if (total > kMaxStates) {
    throw Error(ErrorCode::kTooLarge, "state table would hold " +
                                          std::to_string(total) + " entries");
  }

  BtwDpTable table;
  table.budget = r;
  table.nodes.resize(nice.nodes.size());
  table.decisions.resize(nice.nodes.size());
  for (size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& node = nice.nodes[i];
    BtwStates& out = table.nodes[i];
    switch (node.kind) {
      case NiceKind::kLeaf:
        out = BtwStates(node.bag, r);
        std::fill(out.values.begin(), out.values.end(), DpValue::Finite(0.0));
        break;
      case NiceKind::kIntroduceVertex:
        out = BtwStates(node.bag, r);
        IntroduceVertex(instance, node, table.nodes[node.left], out);
        break;
      case NiceKind::kIntroduceEdge:
        out = BtwStates(node.bag, r);
        IntroduceEdge(instance, node, table.nodes[node.left], out);
        break;
      case NiceKind::kForget:
        out = BtwStates(node.bag, r);
        table.decisions[i].assign(out.values.size(), -1);
        Forget(node, table.nodes[node.left], out, table.decisions[i]);
        break;
      case NiceKind::kJoin:
        out = JoinMerge(table.nodes[node.left], table.nodes[node.right], instance,
                        &table.decisions[i]);
        break;
    }
  }

  const int root = nice.root();
  const DpValue optimum = table.nodes[root].value(0, r);
  if (!optimum.is_finite()) {
    throw Error(ErrorCode::kInfeasible, "root state is infeasible");
  }

  struct Frame {
    int node;
    std::uint32_t f;
    int b;
  };
  std::vector<EdgeId> removed;
  std::vector<Frame> stack{{root, 0, r}};
  while (!stack.empty()) {
    const Frame s = stack.back();
    stack.pop_back();
    const NiceNode& node = nice.nodes[s.node];
    const size_t index = static_cast<size_t>(s.f) * (r + 1) + s.b;
    switch (node.kind) {
      case NiceKind::kLeaf:
        break;
      case NiceKind::kIntroduceVertex:
        stack.push_back({node.left, RemoveBit(s.f, Position(node.bag, node.vertex)), s.b});
        break;
      case NiceKind::kIntroduceEdge: {
        const Edge& e = instance.graph.edge(node.edge);
        const bool cut = ((s.f >> Position(node.bag, e.u)) & 1u) !=
                         ((s.f >> Position(node.bag, e.v)) & 1u);
        if (cut) removed.push_back(node.edge);
        stack.push_back({node.left, s.f, cut ? s.b - 1 : s.b});
        break;
      }
      case NiceKind::kForget: {
        const int p = Position(nice.nodes[node.left].bag, node.vertex);
        const auto bit = static_cast<std::uint32_t>(table.decisions[s.node][index]);
        stack.push_back({node.left, InsertBit(s.f, p, bit), s.b});
        break;
      }
      case NiceKind::kJoin: {
        const int b1 = table.decisions[s.node][index];
        stack.push_back({node.left, s.f, b1});
        stack.push_back({node.right, s.f, s.b - b1});
        break;
      }
    }
  }

  Solution solution = MakeSolution(instance, std::move(removed));
  const double tolerance = 1e-9 * std::max(1.0, std::abs(optimum.value()));
  if (static_cast<int>(solution.removed_edges.size()) > r ||
      std::abs(solution.objective - optimum.value()) > tolerance) {
    throw std::logic_error("reconstructed strategy scores " +
                           std::to_string(solution.objective) + ", table says " +
                           std::to_string(optimum.value()));
  }
  return {std::move(solution), std::move(table)};
}

BtwSolveResult SolveBtwReic(const Instance& instance) {
  CheckInstance(instance);
  return SolveBtwReic(instance,
                      ToExtendedNice(instance.graph, AutoDecomposition(instance.graph)));
}

}  // namespace interdict
