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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "interdict/error.hpp"
#include "interdict/oracle.hpp"
#include "support/test_util.hpp"

namespace interdict {
namespace {

Instance Path(std::vector<Role> roles, std::vector<double> weights,
              int budget) {
  Instance inst;
  const int n = static_cast<int>(roles.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  inst.graph = Graph(n, edges);
  inst.roles = std::move(roles);
  inst.weights = std::move(weights);
  inst.budget = budget;
  return inst;
}

constexpr Role F = Role::kFacility;
constexpr Role C = Role::kCustomer;

TEST(TreeReicTest, SingleCut) {
  const TreeSolveResult result = SolveTreeReic(Path({F, C}, {0, 3}, 1));
  EXPECT_EQ(result.solution.objective, 3.0);
  EXPECT_EQ(result.solution.removed_edges, std::vector<EdgeId>{0});
  EXPECT_EQ(result.solution.disconnected, std::vector<NodeId>{1});
}

TEST(TreeReicTest, BothPathsMustBeCut) {
  EXPECT_EQ(SolveTreeReic(Path({F, C, F}, {0, 5, 0}, 1)).solution.objective,
            0.0);
  const TreeSolveResult two = SolveTreeReic(Path({F, C, F}, {0, 5, 0}, 2));
  EXPECT_EQ(two.solution.objective, 5.0);
  EXPECT_EQ(two.solution.removed_edges, (std::vector<EdgeId>{0, 1}));
}

TEST(TreeReicTest, SingleNode) {
  EXPECT_EQ(SolveTreeReic(Path({C}, {4}, 0)).solution.objective, 4.0);
  EXPECT_EQ(SolveTreeReic(Path({F}, {0}, 3)).solution.objective, 0.0);
}

TEST(TreeReicTest, RejectsNonTrees) {
  Instance forest = Path({F, C, F, C}, {0, 1, 0, 1}, 1);
  forest.graph = Graph(4, {{0, 1}, {2, 3}});
  try {
    SolveTreeReic(forest);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConnected);
  }
  Instance cycle = forest;
  cycle.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  try {
    SolveTreeReic(cycle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotATree);
  }
  Instance wrong = Path({F, C}, {0, 1}, 1);
  wrong.kind = ProblemKind::kFacilityInterdiction;
  try {
    SolveTreeReic(wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongKind);
  }
}

TEST(TreeReicTest, ChildOptionsForFacilityLeaf) {
  // Customer root 0 with a facility leaf child 1.
  const TreeSolveResult result = SolveTreeReic(Path({C, F}, {2, 0}, 2));
  const std::vector<ChildOption> opts =
      ReicChildOptions(ReicContext::kCustomer00, result.table, 1);
  ASSERT_EQ(opts.size(), 3u);
  EXPECT_TRUE(opts[0].value.is_neg_infinity());
  EXPECT_EQ(opts[1].value, DpValue::Finite(0));
  EXPECT_TRUE(opts[1].edge_removed);
  EXPECT_EQ(opts[1].child_condition, Condition::k01);
}

TEST(TreeReicTest, ChildOptionsMatchExpressions) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::MakeInstance(
        rng, testing::RandomTree(rng, 9), 0.4, 4, 3,
        ProblemKind::kEdgeInterdiction);
    const TreeSolveResult res = SolveTreeReic(inst);
    const TreeDpTable& t = res.table;
    auto at = [&](NodeId u, Condition c, int b) {
      return b < 0 ? DpValue::NegInfinity() : t.value(u, c, b);
    };
    for (NodeId u = 1; u < inst.node_count(); ++u) {
      const auto c00 = ReicChildOptions(ReicContext::kCustomer00, t, u);
      const auto c10 = ReicChildOptions(ReicContext::kCustomer10, t, u);
      const auto f = ReicChildOptions(ReicContext::kFacilityX1, t, u);
      const auto linked =
          ReicChildOptions(ReicContext::kCustomerX1Linked, t, u);
      for (int b = 0; b <= 3; ++b) {
        EXPECT_EQ(c00[b].value, Max(at(u, Condition::k00, b),
                                    at(u, Condition::k01, b - 1)));
        EXPECT_EQ(c10[b].value,
                  Max(at(u, Condition::k10, b),
                      Max(at(u, Condition::k00, b - 1),
                          at(u, Condition::k01, b - 1))));
        EXPECT_EQ(f[b].value, Max(Max(at(u, Condition::k10, b),
                                      at(u, Condition::k11, b)),
                                  at(u, Condition::k00, b - 1)));
        EXPECT_EQ(linked[b].value, at(u, Condition::k11, b));
      }
    }
  }
}

double SubtreeWeight(const Instance& inst, const RootedTree& tree, NodeId v) {
  double total = inst.weight(v);
  for (NodeId c : tree.children(v)) total += SubtreeWeight(inst, tree, c);
  return total;
}

void CheckTableInvariants(const Instance& inst, const TreeSolveResult& res) {
  const TreeDpTable& t = res.table;
  const int r = inst.budget;
  EXPECT_EQ(t.value_entry_count(),
            static_cast<size_t>(3 * inst.node_count() * (r + 1)));
  EXPECT_EQ(t.state_entry_count(),
            static_cast<size_t>(3 * (inst.node_count() - 1) * (r + 1)));
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    const double cap = SubtreeWeight(inst, t.tree(), v);
    for (Condition c : {Condition::k00, Condition::k01, Condition::k10,
                        Condition::k11}) {
      for (int b = 0; b <= r; ++b) {
        const DpValue x = t.value(v, c, b);
        if (x.is_finite()) EXPECT_LE(x.value(), cap);
        if (b > 0) EXPECT_LE(t.value(v, c, b - 1), x);
      }
    }
    for (int b = 0; b <= r; ++b) {
      EXPECT_EQ(t.value(v, Condition::k01, b), t.value(v, Condition::k11, b));
    }
  }
  const NodeId root = t.tree().root();
  const DpValue best_x0 =
      Max(t.value(root, Condition::k00, r), t.value(root, Condition::k01, r));
  const DpValue best_all =
      Max(best_x0, Max(t.value(root, Condition::k10, r),
                       t.value(root, Condition::k11, r)));
  EXPECT_EQ(best_x0, best_all);
  EXPECT_EQ(DpValue::Finite(res.solution.objective), best_all);
}

TEST(TreeReicTest, MatchesOracleOnRandomTrees) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::UniformInt(rng, 1, 12);
    const int r = testing::UniformInt(rng, 0, 4);
    const Instance inst = testing::MakeInstance(
        rng, testing::RandomTree(rng, n), 0.2 + 0.3 * (trial % 3), 
        trial % 2 ? 1 : 9, r, ProblemKind::kEdgeInterdiction);
    const TreeSolveResult res = SolveTreeReic(inst);
    const Solution oracle = BruteForceReic(inst);
    ASSERT_EQ(res.solution.objective, oracle.objective) << "trial " << trial;
    EXPECT_LE(static_cast<int>(res.solution.removed_edges.size()), r);
    EXPECT_EQ(testing::FloodFillDisconnected(inst, res.solution.removed_edges),
              res.solution.disconnected);
    CheckTableInvariants(inst, res);
  }
}

TEST(TreeReicTest, ZeroBudget) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = testing::MakeInstance(rng, testing::RandomTree(rng, 10),
                                          0.3, 5, 0,
                                          ProblemKind::kEdgeInterdiction);
    const double expected =
        inst.facilities().empty() ? inst.total_customer_weight() : 0.0;
    EXPECT_EQ(SolveTreeReic(inst).solution.objective, expected);
  }
}

TEST(TreeReicTest, BudgetSaturation) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::UniformInt(rng, 2, 15);
    Instance inst = testing::MakeInstance(rng, testing::RandomTree(rng, n),
                                          0.4, 3, 0,
                                          ProblemKind::kEdgeInterdiction);
    double previous = -1;
    for (int r = 0; r <= n + 2; ++r) {
      inst.budget = r;
      const double value = SolveTreeReic(inst).solution.objective;
      EXPECT_GE(value, previous);
      if (r >= n - 1) {
        EXPECT_EQ(value, inst.total_customer_weight());
      }
      previous = value;
    }
  }
}

}  // namespace
}  // namespace interdict
