// Copyright 2026 The Prefgraph Authors
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

#ifndef PREFGRAPH_CLI_H_
#define PREFGRAPH_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace prefgraph::cli {

inline constexpr std::string_view kToolName = "prefgraph";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitPurity = 1,  // purity violation or failed assertion
  kExitUsage = 2,   // bad usage, unreadable input, I/O failure
};

// `args` excludes the program name. Data goes to files, the human-readable
// table (or JSON with --format json) to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

std::string sha256_hex(std::string_view data);

}  // namespace prefgraph::cli

#endif  // PREFGRAPH_CLI_H_
