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

#ifndef INTERDICT_TREE_RFIC_HPP_
#define INTERDICT_TREE_RFIC_HPP_

#include "interdict/graph.hpp"
#include "interdict/tree_dp.hpp"

namespace interdict {

// Facility interdiction on trees in O(n r^2). Same conditions and table
// layout as SolveTreeReic; a facility in a Y=0 state is the removed one and
// pays one budget unit before its children split the rest. Child states
// never carry the removed flag.
//
// Throws kWrongKind, kNotConnected, kNotATree, or kInvalidArgument.
TreeSolveResult SolveTreeRfic(const Instance& instance);

}  // namespace interdict

#endif  // INTERDICT_TREE_RFIC_HPP_
