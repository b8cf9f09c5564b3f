// Copyright 2026 The eorder Authors. All Rights Reserved.
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

#ifndef EORDER_TOOLS_CLI_H_
#define EORDER_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace eorder::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInsufficientPrefix = 3;

// Runs one command. `args` excludes the program name. Standard input is read
// for `file:-` sources.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace eorder::cli

#endif  // EORDER_TOOLS_CLI_H_
