// Copyright 2026 The SCG Workbench Authors
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


// Command-line front end. Exit codes:
//   0  NE / converged / acyclic / verified / pass
//   1  not an NE, or a check that ran and failed
//   2  improvement cycle
//   3  step limit
//   4  construction not applicable to the instance
//   5  exhaustive scan over the profile cap (SCG_PROFILE_CAP)
//   64 usage error
//   66 missing, unreadable or malformed input file

#ifndef SCG_CLI_HPP_
#define SCG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace scg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitCycle = 2;
inline constexpr int kExitStepLimit = 3;
inline constexpr int kExitInapplicable = 4;
inline constexpr int kExitResourceLimit = 5;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitFileError = 66;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace scg

#endif  // SCG_CLI_HPP_
