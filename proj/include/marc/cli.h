// Copyright 2026 The MARC Solver Authors. All rights reserved.
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

#ifndef MARC_CLI_H_
#define MARC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace marc {

// Exit codes returned by RunCli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFails = 2;
inline constexpr int kExitUnknown = 3;
inline constexpr int kExitInternal = 4;

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace marc

#endif  // MARC_CLI_H_
