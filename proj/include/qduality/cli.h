// Copyright 2026 The qduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDUALITY_CLI_H
#define QDUALITY_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qduality {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadStateFile = 2;
inline constexpr int kExitBadParameter = 3;
inline constexpr int kExitSingularMarginal = 4;

/// Runs the command line `args` (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qduality

#endif
