//===----------------------------------------------------------------------===//
//
// Copyright 2026 The aggfix Authors
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
//
//===----------------------------------------------------------------------===//
// Command-line front end. Kept in a library so tests can drive the commands
// in-process and compare their output byte for byte.
#pragma once

#include "aggfix/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace aggfix::cli {

enum class OutputFormat { Text, Json };
enum class TraceLevel { None, Stages, Full };

struct RunConfig {
    Budget       budget;
    OutputFormat format = OutputFormat::Text;
    TraceLevel   trace = TraceLevel::None;
    bool         quiet = false;
};

/// Exit codes shared by all commands.
enum ExitCode : int {
    kOk          = 0,
    kNegative    = 1, // no answer set, verdict false, or a semantics violation
    kInputError  = 2,
    kLimitError  = 3,
};

/// Runs `aggfix <args...>`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The JSON output schema version.
inline constexpr int kJsonVersion = 1;

} // namespace aggfix::cli
