// Copyright 2026 The lindsim Authors
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

/**
 * @file
 * Command-line front end. Exit status: 0 when every checked row passes, 1
 * when a row fails or a resource limit is hit, 2 for configuration, spec and
 * domain errors. Errors go to the error stream as
 * `lindsim:error:<kind>:<message>`.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lindsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

/// Subcommand names in documentation order.
const std::vector<std::string> &subcommands();

/// "name: col,col,..." per subcommand, or only `name` when given.
std::string schema_text(const std::string &name = {});

/// Parses `args` (without the program name) and runs one subcommand. The
/// report goes to `out` unless --out names a file.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace lindsim::cli
