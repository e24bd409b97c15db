//
// Copyright 2026 The foleval Authors
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
//

#ifndef FOLEVAL_CLI_H_
#define FOLEVAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace foleval {

// Exit codes of the entail command; other commands reuse them.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUncertain = 2;
inline constexpr int kExitCompileError = 3;
inline constexpr int kExitEngineError = 4;

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace foleval

#endif  // FOLEVAL_CLI_H_
