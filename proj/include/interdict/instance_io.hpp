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

#ifndef INTERDICT_INSTANCE_IO_HPP_
#define INTERDICT_INSTANCE_IO_HPP_

#include <span>
#include <string>
#include <string_view>

#include "interdict/graph.hpp"

namespace interdict {

// INTERDICT v1 text format:
//
//   INTERDICT v1
//   problem edge|facility
//   nodes <n>
//   node <id> F | node <id> C <weight>      (n lines)
//   edges <m>
//   edge <u> <v>                            (m lines)
//   budget <r>
//
// Lines whose first non-blank character is '#' are comments. Throws
// ParseError with a 1-based line number.
Instance ReadInstance(std::string_view text);

// Sections are written in the order above with ascending node ids and edges
// in graph order. Weights use the shortest decimal that round-trips. When
// `bipartite_left` is non-empty a trailing `# bipartite U=<ids>` comment is
// appended.
std::string WriteInstance(const Instance& instance,
                          std::span<const NodeId> bipartite_left = {});

Instance ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);
std::string ReadTextFile(const std::string& path);

}  // namespace interdict

#endif  // INTERDICT_INSTANCE_IO_HPP_
