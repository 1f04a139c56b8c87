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

#ifndef INTERDICT_KNAPSACK_HPP_
#define INTERDICT_KNAPSACK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "interdict/dp_value.hpp"

namespace interdict {

struct KnapsackItem {
  int cost = 0;
  DpValue value;
  // Marks items that satisfy the side constraint of the constrained variant.
  bool property = false;
};

using KnapsackBucket = std::vector<KnapsackItem>;

// Multiple-choice knapsack: pick exactly one item per bucket with total cost
// at most the capacity. The constrained variant further requires at least one
// picked item with property == true.
struct CmckpInstance {
  std::vector<KnapsackBucket> buckets;
  int capacity = 0;
};

// DP table over capacities 0..C, built by folding buckets one at a time.
//
// values()[c] is the best total value with cost <= c (NegInfinity when no
// selection fits). In constrained mode two running arrays are kept: one for
// selections without any property item and one for selections with at least
// one; values() exposes the latter. Every fold records, per capacity and
// running array, the chosen item and the array it extended, which is enough
// to recover the full selection for any capacity.
//
// A table is single-owner while folding; once complete it is immutable.
class KnapsackTable {
 public:
  KnapsackTable(int capacity, bool constrained);

  // Adds one bucket. Throws Error(kEmptyBucket) on an empty bucket. Items
  // with cost above the capacity or NegInfinity value are never chosen.
  void Fold(std::span<const KnapsackItem> bucket);

  int capacity() const { return capacity_; }
  int bucket_count() const { return bucket_count_; }
  bool constrained() const { return constrained_; }

  std::span<const DpValue> values() const {
    return constrained_ ? with_property_ : without_property_;
  }
  DpValue value(int capacity) const { return values()[capacity]; }

  // Best values over selections containing no property item (constrained
  // mode) or over all selections (plain mode).
  std::span<const DpValue> values_without_property() const {
    return without_property_;
  }

  // Item index chosen from each bucket, in fold order, for an optimal
  // selection at `capacity`. Throws Error(kInfeasible) when value(capacity)
  // is NegInfinity.
  std::vector<int> Reconstruct(int capacity) const;

 private:
  struct Choice {
    std::int32_t item = -1;
    std::int32_t cost = 0;
    std::uint8_t from_property = 0;
  };

  Choice& choice(int bucket, int array, int capacity) {
    return choices_[(static_cast<size_t>(bucket) * arrays_ + array) *
                        (capacity_ + 1) +
                    capacity];
  }
  const Choice& choice(int bucket, int array, int capacity) const {
    return choices_[(static_cast<size_t>(bucket) * arrays_ + array) *
                        (capacity_ + 1) +
                    capacity];
  }

  int capacity_;
  bool constrained_;
  int arrays_;
  int bucket_count_ = 0;
  std::vector<DpValue> without_property_;
  std::vector<DpValue> with_property_;
  std::vector<Choice> choices_;
};

// Plain multiple-choice knapsack; item properties are ignored.
KnapsackTable SolveMckp(const CmckpInstance& instance);

// Constrained multiple-choice knapsack: at least one chosen item must carry
// the property.
KnapsackTable SolveCmckp(const CmckpInstance& instance);

}  // namespace interdict

#endif  // INTERDICT_KNAPSACK_HPP_
