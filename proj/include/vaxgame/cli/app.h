// Copyright 2026 The Vaxgame Authors. All rights reserved.
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

#ifndef VAXGAME_CLI_APP_H_
#define VAXGAME_CLI_APP_H_

#include <ostream>
#include <string>
#include <vector>

namespace vaxgame::cli {

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`; CSV files go to the output directory. Returns 0 on
// success, 1 for usage errors, 2 for infeasible parameters and 3 when the
// numerical oracle does not converge.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vaxgame::cli

#endif  // VAXGAME_CLI_APP_H_
