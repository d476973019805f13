// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Exit codes: 0 success, 2 usage, parse or
// validation error, 3 refusal of a width-1 instance without
// --force-heuristic.

#ifndef PIPROUND_TOOLS_CLI_H_
#define PIPROUND_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pipround::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHardness = 3;

// Runs the tool on `args` (args[0] is the program name), writing regular
// output to `out` and diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace pipround::cli

#endif  // PIPROUND_TOOLS_CLI_H_
