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

#ifndef INTERDICT_DP_VALUE_HPP_
#define INTERDICT_DP_VALUE_HPP_

#include <compare>
#include <limits>
#include <ostream>

namespace interdict {

// Extended real used by every DP table: a finite value or NegInfinity.
// NegInfinity is absorbing under addition and compares below every finite
// value. The tag is carried by the IEEE -inf bit pattern; no finite payload
// is ever used as a sentinel.
class DpValue {
 public:
  constexpr DpValue() : value_(kTag) {}
  constexpr explicit DpValue(double value) : value_(value) {}

  static constexpr DpValue NegInfinity() { return DpValue(); }
  static constexpr DpValue Finite(double value) { return DpValue(value); }

  constexpr bool is_finite() const { return value_ != kTag; }
  constexpr bool is_neg_infinity() const { return value_ == kTag; }

  // Only meaningful when is_finite().
  constexpr double value() const { return value_; }

  friend constexpr DpValue operator+(DpValue a, DpValue b) {
    if (!a.is_finite() || !b.is_finite()) return NegInfinity();
    return DpValue(a.value_ + b.value_);
  }
  friend constexpr DpValue operator+(DpValue a, double b) {
    return a + DpValue(b);
  }
  friend constexpr DpValue operator-(DpValue a, double b) {
    if (!a.is_finite()) return NegInfinity();
    return DpValue(a.value_ - b);
  }
  DpValue& operator+=(DpValue other) { return *this = *this + other; }

  friend constexpr bool operator==(DpValue a, DpValue b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(DpValue a, DpValue b) {
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr double kTag = -std::numeric_limits<double>::infinity();
  double value_;
};

constexpr DpValue Max(DpValue a, DpValue b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, DpValue v) {
  if (v.is_neg_infinity()) return os << "-inf";
  return os << v.value();
}

}  // namespace interdict

#endif  // INTERDICT_DP_VALUE_HPP_
