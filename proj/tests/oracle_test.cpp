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

#include "interdict/oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "interdict/error.hpp"
#include "support/test_util.hpp"

namespace interdict {
namespace {

Instance SingleEdge(ProblemKind kind) {
  Instance inst;
  inst.graph = Graph(2, {{0, 1}});
  inst.roles = {Role::kFacility, Role::kCustomer};
  inst.weights = {0, 3};
  inst.budget = 1;
  inst.kind = kind;
  return inst;
}

// The 4-cycle f - a(1) - c(4) - b(2) - f.
Instance FourCycle(int budget) {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  inst.roles = {Role::kFacility, Role::kCustomer, Role::kCustomer,
                Role::kCustomer};
  inst.weights = {0, 1, 4, 2};
  inst.budget = budget;
  return inst;
}

TEST(OracleTest, SmallCases) {
  EXPECT_EQ(BruteForceReic(SingleEdge(ProblemKind::kEdgeInterdiction)).objective,
            3.0);
  EXPECT_EQ(
      BruteForceRfic(SingleEdge(ProblemKind::kFacilityInterdiction)).objective,
      3.0);
  Instance none = SingleEdge(ProblemKind::kEdgeInterdiction);
  none.budget = 0;
  EXPECT_EQ(BruteForceReic(none).objective, 0.0);
}

TEST(OracleTest, FourCycle) {
  EXPECT_EQ(BruteForceReic(FourCycle(1)).objective, 0.0);
  const Solution two = BruteForceReic(FourCycle(2));
  EXPECT_EQ(two.objective, 7.0);
  // Both edges at the facility.
  EXPECT_EQ(two.removed_edges, (std::vector<EdgeId>{0, 3}));
}

TEST(OracleTest, StarNeedsAllFacilities) {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
  inst.roles = {Role::kCustomer, Role::kFacility, Role::kFacility,
                Role::kFacility};
  inst.weights = {7, 0, 0, 0};
  inst.budget = 2;
  inst.kind = ProblemKind::kFacilityInterdiction;
  EXPECT_EQ(BruteForceRfic(inst).objective, 0.0);
}

TEST(OracleTest, GuardsAgainstExplosion) {
  Instance big;
  std::vector<Edge> edges;
  for (int i = 0; i < 25; ++i) edges.push_back({i, i + 1});
  big.graph = Graph(26, edges);
  big.roles.assign(26, Role::kCustomer);
  big.weights.assign(26, 1.0);
  big.budget = 1;
  try {
    BruteForceReic(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_EQ(CountSubsetsUpTo(4, 2), 11u);
  EXPECT_GT(CountSubsetsUpTo(24, 12), kOracleMaxSubsets);
}

TEST(OracleTest, MonotoneBoundedAndSelfConsistent) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testing::MakeInstance(
        rng, testing::RandomTree(rng, 9), 0.4, 5, 0,
        trial % 2 ? ProblemKind::kEdgeInterdiction
                  : ProblemKind::kFacilityInterdiction);
    double previous = -1;
    for (int r = 0; r <= 4; ++r) {
      inst.budget = r;
      const Solution s = BruteForce(inst);
      EXPECT_GE(s.objective, previous);
      EXPECT_LE(s.objective, inst.total_customer_weight());
      EXPECT_EQ(EvaluateStrategy(inst, s.removed(inst.kind)).disconnected_weight,
                s.objective);
      previous = s.objective;
    }
  }
}

TEST(OracleTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 2, 8);
    Graph g = testing::RandomTree(rng, n);
    std::vector<Edge> edges = g.edges();
    // One chord on some trials to leave the tree family.
    if (n > 3 && trial % 2) {
      const int a = 0, b = n - 1;
      if (g.find_edge(a, b) < 0) edges.push_back({a, b});
    }
    Instance inst = testing::MakeInstance(
        rng, Graph(n, edges), 0.4, 5, testing::UniformInt(rng, 0, 3),
        trial % 3 ? ProblemKind::kEdgeInterdiction
                  : ProblemKind::kFacilityInterdiction);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Instance relabeled = inst;
    std::vector<Edge> mapped;
    for (const Edge& e : inst.graph.edges()) mapped.push_back({perm[e.u], perm[e.v]});
    relabeled.graph = Graph(n, mapped);
    for (int v = 0; v < n; ++v) {
      relabeled.roles[perm[v]] = inst.roles[v];
      relabeled.weights[perm[v]] = inst.weights[v];
    }
    EXPECT_EQ(BruteForce(inst).objective, BruteForce(relabeled).objective);
  }
}

}  // namespace
}  // namespace interdict
