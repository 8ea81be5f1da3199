// Copyright 2026 The natinterp Authors
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

// Command-line front end. Results go to `out` as JSON (or Graphviz text with
// --dot), diagnostics to `err`.

#ifndef NATINTERP_CLI_HPP_
#define NATINTERP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace natinterp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInvariant = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace natinterp::cli

#endif  // NATINTERP_CLI_HPP_
