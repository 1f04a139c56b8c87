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
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "interdict/error.hpp"

namespace interdict {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

void CheckCommon(const GenConfig& config) {
  Require(config.facility_probability >= 0.0 && config.facility_probability <= 1.0,
          "facility probability must lie in [0, 1]");
  Require(config.max_weight >= 1, "max weight must be >= 1");
  Require(config.budget >= 0, "budget must be >= 0");
  Require(std::isfinite(config.budget_ratio), "budget ratio must be finite");
}

int ResolveBudget(const GenConfig& config, int nodes) {
  if (config.budget_ratio < 0) return config.budget;
  return static_cast<int>(std::lround(config.budget_ratio * nodes));
}

// Customer weights drawn for every node in id order so the stream does not
// depend on the roles.
void FillWeights(const GenConfig& config, Instance& inst) {
  const int n = inst.node_count();
  inst.weights.assign(n, 0.0);
  Rng rng(config.seed, kWeightStream);
  for (NodeId v = 0; v < n; ++v) {
    const double w = config.max_weight == 1
                         ? 1.0
                         : static_cast<double>(rng.UniformInt(1, config.max_weight));
    if (inst.is_customer(v)) inst.weights[v] = w;
  }
}

Instance Finish(const GenConfig& config, Graph graph, std::vector<Role> roles) {
  Instance inst;
  inst.graph = std::move(graph);
  inst.roles = std::move(roles);
  FillWeights(config, inst);
  inst.budget = ResolveBudget(config, inst.node_count());
  inst.kind = config.kind;
  return inst;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  engine_.seed(seq);
}

std::int64_t Rng::UniformInt(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x = Next();
  while (x > limit) x = Next();
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kPruferTree: return "prufer";
    case Family::kLeafFacilityCluster: return "leaf-cluster";
    case Family::kWalkerGrid: return "walker";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  for (Family f : {Family::kPruferTree, Family::kLeafFacilityCluster, Family::kWalkerGrid}) {
    if (FamilyName(f) == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

Graph DecodePrufer(int n, std::span<const int> sequence) {
  Require(n >= 2, "a Prüfer tree needs n >= 2");
  Require(static_cast<int>(sequence.size()) == n - 2, "sequence length must be n - 2");
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    Require(v >= 0 && v < n, "sequence entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph(n, edges);
}

std::vector<int> RandomPruferSequence(Rng& rng, int n) {
  std::vector<int> sequence(std::max(n - 2, 0));
  for (int& v : sequence) v = static_cast<int>(rng.UniformInt(0, n - 1));
  return sequence;
}

std::vector<Role> LeafFacilityRoles(const Graph& tree, double p, Rng& rng) {
  const int n = tree.node_count();
  std::vector<Role> roles(n, Role::kCustomer);
  std::vector<NodeId> leaves;
  bool any = false;
  for (NodeId v = 0; v < n; ++v) {
    if (tree.degree(v) != 1) continue;
    leaves.push_back(v);
    if (rng.Bernoulli(p)) {
      roles[v] = Role::kFacility;
      any = true;
    }
  }
  if (!any && !leaves.empty()) {
    roles[leaves[rng.UniformInt(0, static_cast<std::int64_t>(leaves.size()) - 1)]] =
        Role::kFacility;
  }
  return roles;
}

Instance GenPruferTree(const GenConfig& config) {
  CheckCommon(config);
  Require(config.n >= 2, "tree families need n >= 2");
  Rng shape(config.seed, kShapeStream);
  Graph tree = DecodePrufer(config.n, RandomPruferSequence(shape, config.n));
  Rng role(config.seed, kRoleStream);
  std::vector<Role> roles(config.n, Role::kCustomer);
  for (Role& r : roles) {
    if (role.Bernoulli(config.facility_probability)) r = Role::kFacility;
  }
  return Finish(config, std::move(tree), std::move(roles));
}

Instance GenLeafFacilityCluster(const GenConfig& config) {
  CheckCommon(config);
  Require(config.n >= 3, "leaf-facility clusters need n >= 3");
  Rng shape(config.seed, kShapeStream);
  Graph tree = DecodePrufer(config.n, RandomPruferSequence(shape, config.n));
  Rng role(config.seed, kRoleStream);
  std::vector<Role> roles = LeafFacilityRoles(tree, config.facility_probability, role);
  return Finish(config, std::move(tree), std::move(roles));
}

Instance GenWalkerGrid(const GenConfig& config) {
  CheckCommon(config);
  Require(config.planes >= 1, "walker grids need at least one plane");
  Require(config.n >= 2, "walker grids need n >= 2 satellites per plane");
  Require(config.ground_stations >= 0, "ground station count must be >= 0");
  const int k = config.planes;
  const int n = config.n;
  const int satellites = k * n;
  std::vector<Edge> edges;
  for (int p = 0; p < k; ++p) {
    for (int j = 0; j + 1 < n; ++j) edges.push_back({p * n + j, p * n + j + 1});
    if (config.ring && n > 2) edges.push_back({p * n, p * n + n - 1});
  }
  for (int p = 0; p + 1 < k; ++p) {
    for (int j = 0; j < n; ++j) edges.push_back({p * n + j, (p + 1) * n + j});
  }
  Rng shape(config.seed, kShapeStream);
  for (int g = 0; g < config.ground_stations; ++g) {
    edges.push_back({static_cast<NodeId>(shape.UniformInt(0, satellites - 1)),
                     satellites + g});
  }
  const int total = satellites + config.ground_stations;
  std::vector<Role> roles(total, Role::kCustomer);
  for (int g = satellites; g < total; ++g) roles[g] = Role::kFacility;
  return Finish(config, Graph(total, edges), std::move(roles));
}

Instance Generate(const GenConfig& config) {
  switch (config.family) {
    case Family::kPruferTree: return GenPruferTree(config);
    case Family::kLeafFacilityCluster: return GenLeafFacilityCluster(config);
    case Family::kWalkerGrid: return GenWalkerGrid(config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace interdict
