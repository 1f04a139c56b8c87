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

#include "interdict/knapsack.hpp"

#include <string>

#include "interdict/error.hpp"

namespace interdict {

KnapsackTable::KnapsackTable(int capacity, bool constrained)
    : capacity_(capacity),
      constrained_(constrained),
      arrays_(constrained ? 2 : 1) {
  if (capacity < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative knapsack capacity");
  }
  // Zero buckets: the empty selection costs nothing and has no property item.
  without_property_.assign(capacity + 1, DpValue::Finite(0.0));
  if (constrained_) with_property_.assign(capacity + 1, DpValue::NegInfinity());
}

void KnapsackTable::Fold(std::span<const KnapsackItem> bucket) {
  if (bucket.empty()) {
    throw Error(ErrorCode::kEmptyBucket,
                "bucket " + std::to_string(bucket_count_) + " has no items");
  }
  const int bucket_index = bucket_count_++;
  choices_.resize(static_cast<size_t>(bucket_count_) * arrays_ *
                  (capacity_ + 1));

  std::vector<DpValue> next_without(capacity_ + 1, DpValue::NegInfinity());
  std::vector<DpValue> next_with;
  if (constrained_) next_with.assign(capacity_ + 1, DpValue::NegInfinity());

  for (int j = 0; j < static_cast<int>(bucket.size()); ++j) {
    const KnapsackItem& item = bucket[j];
    if (item.cost < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative item cost");
    }
    if (item.cost > capacity_ || !item.value.is_finite()) continue;
    for (int c = item.cost; c <= capacity_; ++c) {
      const int base = c - item.cost;
      if (!constrained_) {
        const DpValue x = without_property_[base] + item.value;
        if (x > next_without[c]) {
          next_without[c] = x;
          choice(bucket_index, 0, c) = {j, item.cost, 0};
        }
        continue;
      }
      if (!item.property) {
        const DpValue x0 = without_property_[base] + item.value;
        if (x0 > next_without[c]) {
          next_without[c] = x0;
          choice(bucket_index, 0, c) = {j, item.cost, 0};
        }
        const DpValue x1 = with_property_[base] + item.value;
        if (x1 > next_with[c]) {
          next_with[c] = x1;
          choice(bucket_index, 1, c) = {j, item.cost, 1};
        }
      } else {
        // A property item satisfies the constraint whatever came before.
        const bool from_with = with_property_[base] > without_property_[base];
        const DpValue x =
            (from_with ? with_property_[base] : without_property_[base]) +
            item.value;
        if (x > next_with[c]) {
          next_with[c] = x;
          choice(bucket_index, 1, c) = {j, item.cost,
                                        static_cast<std::uint8_t>(from_with)};
        }
      }
    }
  }
  without_property_ = std::move(next_without);
  if (constrained_) with_property_ = std::move(next_with);
}

std::vector<int> KnapsackTable::Reconstruct(int capacity) const {
  if (capacity < 0 || capacity > capacity_) {
    throw Error(ErrorCode::kInvalidArgument,
                "capacity " + std::to_string(capacity) + " outside table");
  }
  if (!value(capacity).is_finite()) {
    throw Error(ErrorCode::kInfeasible,
                "no feasible selection at capacity " + std::to_string(capacity));
  }
  std::vector<int> picked(bucket_count_, -1);
  int array = constrained_ ? 1 : 0;
  int c = capacity;
  for (int i = bucket_count_ - 1; i >= 0; --i) {
    const Choice& ch = choice(i, array, c);
    picked[i] = ch.item;
    c -= ch.cost;
    array = constrained_ ? ch.from_property : 0;
  }
  return picked;
}

KnapsackTable SolveMckp(const CmckpInstance& instance) {
  KnapsackTable table(instance.capacity, /*constrained=*/false);
  for (const KnapsackBucket& bucket : instance.buckets) table.Fold(bucket);
  return table;
}

KnapsackTable SolveCmckp(const CmckpInstance& instance) {
  KnapsackTable table(instance.capacity, /*constrained=*/true);
  for (const KnapsackBucket& bucket : instance.buckets) table.Fold(bucket);
  return table;
}

}  // namespace interdict
