// Copyright 2026 The kmsmote Authors.
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


// Command-line front end. Kept in a library so tests can drive it without
// spawning processes.

#ifndef KMSMOTE_TOOLS_CLI_H_
#define KMSMOTE_TOOLS_CLI_H_

#include <iosfwd>

namespace kmsmote::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNoMinorityCluster = 3;
inline constexpr int kExitInternal = 4;

// Parses argv (argv[0] is the program name), runs the subcommand and returns
// the process exit code. Diagnostics go to `err`, help and progress to `out`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace kmsmote::cli

#endif  // KMSMOTE_TOOLS_CLI_H_
