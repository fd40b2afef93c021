// Copyright 2026 The symf Authors
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

#ifndef SYMF_TOOLS_COMMANDS_H
#define SYMF_TOOLS_COMMANDS_H

#include <iosfwd>

namespace symf {

enum ExitCode : int {
    kExitOk = 0,
    kExitDomainFailure = 1,
    kExitUsage = 2,
};

/// Parses argv and dispatches a subcommand. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace symf

#endif
