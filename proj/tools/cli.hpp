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

#ifndef INTERDICT_TOOLS_CLI_HPP_
#define INTERDICT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "interdict/error.hpp"

namespace interdict::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // some bench instances failed
inline constexpr int kExitInput = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitResource = 4;

int ExitCodeFor(ErrorCode code);

// Runs the tool on `args` (args[0] is the program name).
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interdict::cli

#endif  // INTERDICT_TOOLS_CLI_HPP_
