/*
   Copyright 2026 The jacinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JACINV_CLI_COMMANDS_HPP
#define JACINV_CLI_COMMANDS_HPP

#include <iosfwd>

namespace jacinv::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_bad_config = 2,
};

/// Entry point for the eval, verify and solve commands. Normal output goes to
/// `out` (or the --out file), diagnostics to `err`. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jacinv::cli

#endif
