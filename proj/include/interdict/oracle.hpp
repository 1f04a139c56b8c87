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

#ifndef INTERDICT_ORACLE_HPP_
#define INTERDICT_ORACLE_HPP_

#include <cstdint>

#include "interdict/graph.hpp"

namespace interdict {

// Exhaustive solvers used as ground truth. Subsets are enumerated by size,
// and in colexicographic order within a size; the first maximizer wins.
// Both throw kTooLarge rather than truncate the search.

inline constexpr int kOracleMaxEdges = 24;
inline constexpr int kOracleMaxFacilities = 20;
inline constexpr std::uint64_t kOracleMaxSubsets = 1'000'000;

// Number of subsets of size <= r drawn from `pool` elements, saturating at
// kOracleMaxSubsets + 1.
std::uint64_t CountSubsetsUpTo(int pool, int r);

Solution BruteForceReic(const Instance& instance);
Solution BruteForceRfic(const Instance& instance);

// Dispatches on instance.kind.
Solution BruteForce(const Instance& instance);

}  // namespace interdict

#endif  // INTERDICT_ORACLE_HPP_
