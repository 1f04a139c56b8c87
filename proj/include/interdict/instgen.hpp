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

#ifndef INTERDICT_INSTGEN_HPP_
#define INTERDICT_INSTGEN_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// Seeded generator whose draws are identical on every platform: Mersenne
// Twister seeded through std::seed_seq, with bounded integers by rejection
// and doubles from the top 53 bits. Independent streams of one seed are
// selected by `stream`.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint32_t stream = 0);

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  // Uniform double in [0, 1).
  double UniformReal();
  bool Bernoulli(double p) { return UniformReal() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class Family : std::uint8_t { kPruferTree, kLeafFacilityCluster, kWalkerGrid };

std::string_view FamilyName(Family family);  // "prufer", "leaf-cluster", "walker"
// Throws kInvalidArgument for an unknown name.
Family ParseFamily(std::string_view name);

struct GenConfig {
  Family family = Family::kPruferTree;
  int n = 10;       // tree nodes, or satellites per plane for walker grids
  int planes = 1;   // walker grids only
  bool ring = false;
  int ground_stations = 2;
  double facility_probability = 0.4;
  int max_weight = 1;  // 1: unit weights; W > 1: uniform integers in [1, W]
  int budget = 0;
  double budget_ratio = -1.0;  // when >= 0, budget = round(ratio * nodes)
  ProblemKind kind = ProblemKind::kEdgeInterdiction;
  std::uint64_t seed = 1;
};

// Streams drawn from a single seed.
inline constexpr std::uint32_t kShapeStream = 1;
inline constexpr std::uint32_t kRoleStream = 2;
inline constexpr std::uint32_t kWeightStream = 3;

// Tree whose Prüfer sequence is `sequence` (length n - 2, entries in [0, n)).
// Throws kInvalidArgument otherwise.
Graph DecodePrufer(int n, std::span<const int> sequence);

std::vector<int> RandomPruferSequence(Rng& rng, int n);

// Each leaf becomes a facility with probability p; when none does, one leaf
// chosen uniformly is forced. Every other node is a customer.
std::vector<Role> LeafFacilityRoles(const Graph& tree, double p, Rng& rng);

// Uniform labeled tree on n >= 2 nodes; each node a facility with
// probability p.
Instance GenPruferTree(const GenConfig& config);
// Uniform labeled tree on n >= 3 nodes with facilities on leaves only.
Instance GenLeafFacilityCluster(const GenConfig& config);
// planes x n satellites (customers), node plane * n + j, joined along each
// plane (a ring when `ring` is set) and by a rung per column; ground
// stations are facility leaves numbered after the satellites and attached to
// uniformly drawn satellites.
Instance GenWalkerGrid(const GenConfig& config);

// Dispatches on config.family. Throws kInvalidArgument for parameters out
// of range.
Instance Generate(const GenConfig& config);

}  // namespace interdict

#endif  // INTERDICT_INSTGEN_HPP_
