// Copyright 2026 The fcnot Authors
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

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace fcnot {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParseError = 2,
  kExitUnsupportedSize = 3,
};

/// Largest circuit the synth/stats commands will emit.
inline constexpr std::size_t kMaxSynthQubits = std::size_t{1} << 16;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcnot
