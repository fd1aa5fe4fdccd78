// Copyright 2026 The simplegame Authors
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

#ifndef SIMPLEGAME_CLI_HPP_
#define SIMPLEGAME_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace simplegame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitSizeLimit = 2;

// Runs one command. `args` excludes the program name. Games are read from
// the named files, or from `in` when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace simplegame::cli

#endif  // SIMPLEGAME_CLI_HPP_
