// Copyright 2026 The kaprekar Authors. All Rights Reserved.
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

#ifndef KAPREKAR_TOOLS_CLI_HPP_
#define KAPREKAR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace kaprekar::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitResource = 2,
};

/// Runs the command line `args` (without the program name), writing the
/// rendered result to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kaprekar::cli

#endif  // KAPREKAR_TOOLS_CLI_HPP_
