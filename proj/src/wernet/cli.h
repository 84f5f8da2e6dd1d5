// Copyright 2026 The wernet Authors
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

#ifndef WERNET_CLI_H
#define WERNET_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace wernet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReplayMismatch = 1;
inline constexpr int kExitFlagError = 2;
inline constexpr int kExitNumericalError = 3;

/// Values from "v", "v1,v2,..." or an inclusive range "lo:hi:step".
/// Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string &spec);

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wernet

#endif
