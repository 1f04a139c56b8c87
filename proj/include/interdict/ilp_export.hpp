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

#ifndef INTERDICT_ILP_EXPORT_HPP_
#define INTERDICT_ILP_EXPORT_HPP_

#include <string>
#include <string_view>

#include "interdict/graph.hpp"

namespace interdict {

struct IlpModel {
  std::string text;  // CPLEX LP format
  int coverage_constraints = 0;
  int variables = 0;
  double total_weight = 0.0;
};

// Edge interdiction on a tree as a binary program: minimize the covered
// weight sum w(v) x_v subject to x_v + sum of y_e over the path from v to s
// >= 1 for every customer v and facility s, and sum y_e <= r. Variables are
// named x_<node> and y_<edge>. The REIC optimum is total_weight minus the
// model optimum; the header comment records both.
//
// Throws kWrongKind, kNotConnected or kNotATree.
IlpModel ExportReicLp(const Instance& instance);

// Reads a "name value" listing (blank and '#' lines ignored; variables not
// listed are 0) and returns the strategy removing every edge with y_e = 1,
// scored by EvaluateStrategy. x values are checked for form only. Throws
// ParseError for malformed lines and kInconsistentSolution for unknown or
// repeated names, non-binary values or more removals than the budget.
Solution ImportSolution(const Instance& instance, std::string_view listing);

}  // namespace interdict

#endif  // INTERDICT_ILP_EXPORT_HPP_
