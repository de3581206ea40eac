// Copyright 2026 The batchbandit Authors.
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

#ifndef BATCHBANDIT_TOOLS_CLI_H_
#define BATCHBANDIT_TOOLS_CLI_H_

#include <ostream>

namespace batchbandit {

// Exit codes of the batchbandit tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitVerifyFailed = 2;

// Runs the command line. Results go to `out` (unless --out names a file);
// diagnostics and usage text go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace batchbandit

#endif  // BATCHBANDIT_TOOLS_CLI_H_
