// Copyright 2026 The pascal11 Authors
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

#ifndef PASCAL_TOOLS_CLI_H_
#define PASCAL_TOOLS_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace pascal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool with `args` (args[0] is the program name). Data goes to
// `out`, diagnostics to `err`. Reads PASCAL_KARATSUBA_THRESHOLD from the
// environment unless --karatsuba-threshold is given.
int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err);

}  // namespace pascal::cli

#endif  // PASCAL_TOOLS_CLI_H_
