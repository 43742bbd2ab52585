/*
   Copyright 2026 The cycalg Authors

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

#ifndef CYCALG_TOOLS_CLI_HPP
#define CYCALG_TOOLS_CLI_HPP

#include <ostream>

namespace cycalg::cli {

inline constexpr const char* kSchemaVersion = "1.0.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;   // an assert-grade invariant failed
inline constexpr int kUsage = 2;         // invalid configuration
inline constexpr int kInternal = 3;      // unexpected exception

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cycalg::cli

#endif  // CYCALG_TOOLS_CLI_HPP
