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

#include "interdict/instgen.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "boost/math/special_functions/gamma.hpp"
#include "gtest/gtest.h"
#include "interdict/error.hpp"
#include "interdict/instance_io.hpp"
#include "interdict/oracle.hpp"
#include "interdict/tree_reic.hpp"
#include "interdict/tree_rfic.hpp"
#include "interdict/treewidth.hpp"

namespace interdict {
namespace {

GenConfig TreeConfig(int n, double p, std::uint64_t seed) {
  GenConfig config;
  config.n = n;
  config.facility_probability = p;
  config.seed = seed;
  return config;
}

TEST(RngTest, StreamsAreReproducibleAndDistinct) {
  Rng a(5, 1), b(5, 1), c(5, 2), d(6, 1);
  const std::uint64_t first = a.Next();
  EXPECT_EQ(first, b.Next());
  EXPECT_NE(first, c.Next());
  EXPECT_NE(first, d.Next());
}

TEST(RngTest, BoundedDrawsStayInRange) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.UniformInt(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    ++hits[x + 3];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.UniformReal();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(PruferTest, BaseCases) {
  EXPECT_EQ(DecodePrufer(2, {}).edges(), (std::vector<Edge>{{0, 1}}));
  const std::vector<int> star = {3, 3};
  const Graph g = DecodePrufer(4, star);
  EXPECT_EQ(g.degree(3), 3);
  EXPECT_TRUE(g.is_tree());
  EXPECT_THROW(DecodePrufer(4, std::vector<int>{4, 0}), Error);
  EXPECT_THROW(DecodePrufer(4, std::vector<int>{1}), Error);
}

TEST(PruferTest, ChiSquareOverLabeledTreesOnFourNodes) {
  Rng rng(2024);
  std::map<std::set<std::pair<int, int>>, int> counts;
  const int samples = 16000;
  for (int i = 0; i < samples; ++i) {
    const Graph g = DecodePrufer(4, RandomPruferSequence(rng, 4));
    std::set<std::pair<int, int>> key;
    for (const Edge& e : g.edges()) key.insert({e.u, e.v});
    ++counts[key];
  }
  ASSERT_EQ(counts.size(), 16u);
  const double expected = samples / 16.0;
  double chi2 = 0.0;
  for (const auto& [tree, count] : counts) {
    chi2 += (count - expected) * (count - expected) / expected;
  }
  EXPECT_GT(boost::math::gamma_q(15 / 2.0, chi2 / 2), 0.001);
}

TEST(GenPruferTreeTest, ShapeAndDeterminism) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = GenPruferTree(TreeConfig(30, 0.4, seed));
    EXPECT_EQ(inst.graph.edge_count(), 29);
    EXPECT_TRUE(inst.graph.is_tree());
    EXPECT_EQ(WriteInstance(inst), WriteInstance(GenPruferTree(TreeConfig(30, 0.4, seed))));
  }
  EXPECT_NE(WriteInstance(GenPruferTree(TreeConfig(30, 0.4, 1))),
            WriteInstance(GenPruferTree(TreeConfig(30, 0.4, 2))));
}

TEST(GenPruferTreeTest, FacilityFraction) {
  const Instance inst = GenPruferTree(TreeConfig(10000, 0.4, 77));
  const double fraction = inst.facilities().size() / 10000.0;
  EXPECT_NEAR(fraction, 0.4, 0.02);
}

TEST(GenPruferTreeTest, WeightsAndBudget) {
  GenConfig config = TreeConfig(100, 0.3, 5);
  config.max_weight = 9;
  config.budget_ratio = 0.1;
  const Instance inst = GenPruferTree(config);
  EXPECT_EQ(inst.budget, 10);
  for (NodeId v = 0; v < 100; ++v) {
    if (inst.is_facility(v)) {
      EXPECT_EQ(inst.weights[v], 0.0);
    } else {
      EXPECT_GE(inst.weights[v], 1.0);
      EXPECT_LE(inst.weights[v], 9.0);
      EXPECT_EQ(inst.weights[v], static_cast<int>(inst.weights[v]));
    }
  }
  // The shape does not depend on the weight settings.
  EXPECT_EQ(inst.graph, GenPruferTree(TreeConfig(100, 0.3, 5)).graph);
}

TEST(GenPruferTreeTest, SmallInstancesMatchOracle) {
  GenConfig reic = TreeConfig(8, 0.4, 42);
  reic.budget = 2;
  const Instance a = GenPruferTree(reic);
  EXPECT_EQ(SolveTreeReic(a).solution.objective, BruteForceReic(a).objective);

  GenConfig rfic = TreeConfig(10, 0.5, 11);
  rfic.budget = 3;
  rfic.kind = ProblemKind::kFacilityInterdiction;
  const Instance b = GenPruferTree(rfic);
  EXPECT_EQ(SolveTreeRfic(b).solution.objective, BruteForceRfic(b).objective);
}

TEST(GenPruferTreeTest, RejectsBadConfig) {
  EXPECT_THROW(GenPruferTree(TreeConfig(1, 0.4, 1)), Error);
  EXPECT_THROW(GenPruferTree(TreeConfig(5, 1.5, 1)), Error);
}

TEST(LeafFacilityTest, StarWithCertainFacilities) {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  Rng rng(1);
  EXPECT_EQ(LeafFacilityRoles(star, 1.0, rng),
            (std::vector<Role>{Role::kCustomer, Role::kFacility, Role::kFacility,
                               Role::kFacility}));
  const std::vector<Role> forced = LeafFacilityRoles(star, 0.0, rng);
  EXPECT_EQ(std::count(forced.begin(), forced.end(), Role::kFacility), 1);
  EXPECT_EQ(forced[0], Role::kCustomer);
}

// Customers whose removal leaves >= 3 facility-holding components, by
// deleting each customer and flood-filling.
int JointsByDeletion(const Instance& inst) {
  const int n = inst.node_count();
  int joints = 0;
  for (NodeId c : inst.customers()) {
    std::vector<int> seen(n, 0);
    seen[c] = 1;
    int with_facility = 0;
    for (NodeId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      bool facility = false;
      std::vector<NodeId> stack = {s};
      seen[s] = 1;
      while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        facility = facility || inst.is_facility(v);
        for (const Incidence& inc : inst.graph.neighbors(v)) {
          if (!seen[inc.neighbor]) {
            seen[inc.neighbor] = 1;
            stack.push_back(inc.neighbor);
          }
        }
      }
      with_facility += facility;
    }
    joints += with_facility >= 3;
  }
  return joints;
}

TEST(LeafFacilityTest, FacilitiesAreLeavesAndJointsMatch) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenConfig config = TreeConfig(70, 0.5, seed);
    config.family = Family::kLeafFacilityCluster;
    const Instance inst = Generate(config);
    ASSERT_FALSE(inst.facilities().empty());
    for (NodeId f : inst.facilities()) EXPECT_EQ(inst.graph.degree(f), 1);
    EXPECT_EQ(CountCustomerJoints(inst), JointsByDeletion(inst)) << "seed " << seed;
  }
}

GenConfig Walker(int planes, int n, bool ring, int stations) {
  GenConfig config;
  config.family = Family::kWalkerGrid;
  config.planes = planes;
  config.n = n;
  config.ring = ring;
  config.ground_stations = stations;
  return config;
}

TEST(WalkerGridTest, Shapes) {
  const Instance ring = Generate(Walker(1, 4, true, 0));
  EXPECT_EQ(ring.graph.edge_count(), 4);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(ring.graph.degree(v), 2);

  const Instance path = Generate(Walker(2, 3, false, 0));
  EXPECT_EQ(path.node_count(), 6);
  EXPECT_EQ(path.graph.edge_count(), 7);

  EXPECT_EQ(Generate(Walker(1, 2, true, 0)).graph.edge_count(), 1);

  const Instance grid = Generate(Walker(3, 5, false, 0));
  const TreeDecomposition td = GridDecomposition(3, 5);
  EXPECT_TRUE(ValidateDecomposition(grid.graph, td).empty());
  EXPECT_EQ(td.width(), 3);
}

TEST(WalkerGridTest, GroundStations) {
  const Instance inst = Generate(Walker(3, 4, true, 5));
  EXPECT_EQ(inst.node_count(), 17);
  EXPECT_EQ(inst.facilities(), (std::vector<NodeId>{12, 13, 14, 15, 16}));
  for (NodeId f : inst.facilities()) EXPECT_EQ(inst.graph.degree(f), 1);
  EXPECT_TRUE(inst.graph.is_connected());
}

TEST(FamilyTest, Names) {
  for (Family f : {Family::kPruferTree, Family::kLeafFacilityCluster, Family::kWalkerGrid}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_THROW(ParseFamily("hypercube"), Error);
}

}  // namespace
}  // namespace interdict
