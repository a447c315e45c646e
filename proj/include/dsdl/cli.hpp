// Copyright 2026 The DSDL Tools Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsdl {

enum ExitCode : int { kExitOk = 0, kExitErrors = 1, kExitUsage = 2 };

/// What the front end may read from the host process.
struct CliEnvironment {
  /// `KEY=VALUE` entries (DSDL_LIBRARY_PATH, DSDL_ALIAS_<NAME>).
  std::vector<std::string> variables;
  std::string default_library_dir;

  /// Snapshot of the process environment and the compiled-in library dir.
  static CliEnvironment from_process();
};

/// Subcommands: validate, inspect, resolve-loc, summary. `args` excludes the
/// program name. Results go to `out`; usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env);

}  // namespace dsdl
