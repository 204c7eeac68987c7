// Copyright 2026 The qudit-ramsey Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qudit_ramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qudit-ramsey` tool with subcommands `sweep`, `table`
/// and `qfi`. argv[0] is the program name. Regular output goes to `out`,
/// diagnostics and usage text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qudit_ramsey::cli
