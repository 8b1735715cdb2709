// Copyright 2026 The ModSum Cards Authors. All rights reserved.
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

#ifndef MODSUM_CLI_H_
#define MODSUM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace modsum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code:
// 0 all checks pass, 1 a verdict or property failed, 2 usage error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace modsum

#endif  // MODSUM_CLI_H_
