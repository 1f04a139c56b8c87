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
#include <string>
#include <vector>

#include "interdict/error.hpp"

namespace interdict {

std::uint64_t CountSubsetsUpTo(int pool, int r) {
  const int top = std::min(pool, r);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(pool, i)
  for (int i = 0; i <= top; ++i) {
    if (i > 0) binom = binom * (pool - i + 1) / i;
    total += binom;
    if (total > kOracleMaxSubsets) return kOracleMaxSubsets + 1;
  }
  return total;
}

namespace {

// Scores every subset of `pool` of size <= r and returns the best.
Solution Enumerate(const Instance& instance, const std::vector<int>& pool) {
  const int size = static_cast<int>(pool.size());
  const int top = std::min(size, instance.budget);
  std::vector<int> removed;
  std::uint64_t best_mask = 0;
  double best = -1.0;
  for (int k = 0; k <= top; ++k) {
    // Gosper's hack walks k-subsets in increasing mask order (colex).
    std::uint64_t mask = (k == 0) ? 0 : ((std::uint64_t{1} << k) - 1);
    const std::uint64_t limit = std::uint64_t{1} << size;
    while (mask < limit) {
      removed.clear();
      for (int i = 0; i < size; ++i) {
        if (mask >> i & 1) removed.push_back(pool[i]);
      }
      const double value =
          EvaluateStrategy(instance, removed).disconnected_weight;
      if (value > best) {
        best = value;
        best_mask = mask;
      }
      if (mask == 0) break;
      const std::uint64_t lowest = mask & -mask;
      const std::uint64_t ripple = mask + lowest;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
  }
  removed.clear();
  for (int i = 0; i < size; ++i) {
    if (best_mask >> i & 1) removed.push_back(pool[i]);
  }
  return MakeSolution(instance, removed);
}

void CheckKind(const Instance& instance, ProblemKind kind) {
  if (instance.kind != kind) {
    throw Error(ErrorCode::kWrongKind,
                "oracle expects a " + std::string(ProblemKindName(kind)) +
                    " interdiction instance");
  }
  if (instance.budget < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative budget");
  }
}

}  // namespace

Solution BruteForceReic(const Instance& instance) {
  CheckKind(instance, ProblemKind::kEdgeInterdiction);
  const int m = instance.graph.edge_count();
  if (m > kOracleMaxEdges ||
      CountSubsetsUpTo(m, instance.budget) > kOracleMaxSubsets) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(m) + " edges with budget " +
                    std::to_string(instance.budget) + " exceed oracle limits");
  }
  std::vector<int> pool(m);
  for (int e = 0; e < m; ++e) pool[e] = e;
  return Enumerate(instance, pool);
}

Solution BruteForceRfic(const Instance& instance) {
  CheckKind(instance, ProblemKind::kFacilityInterdiction);
  const std::vector<NodeId> pool = instance.facilities();
  const int s = static_cast<int>(pool.size());
  if (s > kOracleMaxFacilities ||
      CountSubsetsUpTo(s, instance.budget) > kOracleMaxSubsets) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(s) + " facilities with budget " +
                    std::to_string(instance.budget) + " exceed oracle limits");
  }
  return Enumerate(instance, pool);
}

Solution BruteForce(const Instance& instance) {
  return instance.kind == ProblemKind::kEdgeInterdiction
             ? BruteForceReic(instance)
             : BruteForceRfic(instance);
}

}  // namespace interdict
