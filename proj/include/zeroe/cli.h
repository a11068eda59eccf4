// Copyright 2026 The Zeroe Authors
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

#ifndef ZEROE_CLI_H_
#define ZEROE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace zeroe {

inline constexpr char kToolVersion[] = "0.1.0";

// Exit codes: 0 ok, 1 I/O or parse failure, 2 usage or validation error,
// 3 sweep finished with some attackers skipped.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitPartial = 3,
};

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);
int RunCli(int argc, char** argv);

}  // namespace zeroe

#endif  // ZEROE_CLI_H_
