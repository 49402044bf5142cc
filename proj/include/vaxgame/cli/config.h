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

#ifndef VAXGAME_CLI_CONFIG_H_
#define VAXGAME_CLI_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vaxgame/oracle.h"
#include "vaxgame/params.h"

namespace vaxgame::cli {

// Everything a subcommand needs. Fields are set from a key=value file first
// and then from command-line flags.
struct RunConfig {
  ModelParams params = BaselineParams();
  std::optional<PolicyKind> policy;  // empty: every policy the command knows
  double t_end = 100.0;
  std::size_t points = 1000;
  double psi = 0.0;  // constant customer reimbursement for customer-p
  std::optional<double> tau;  // early comparison time
  OracleConfig oracle;
  double compare_end = 100.0;
  std::string sweep_param = "eta";
  double sweep_from = 4.0;
  double sweep_to = 10.0;
  std::size_t sweep_count = 13;
  std::string out_dir = ".";
};

// Settings recognised in config files and by --set, besides the ten model
// parameters.
const std::vector<std::string_view>& RunSettingKeys();

// Applies one key=value pair. Throws UsageError naming the key for unknown
// keys and unparsable or out-of-range values.
void ApplySetting(RunConfig& config, std::string_view key,
                  std::string_view value);

// Reads `key = value` lines; '#' starts a comment, blank lines are ignored.
// Returns the model parameter names that were set.
std::vector<std::string> ApplyConfigFile(RunConfig& config,
                                         const std::string& path);

// Parses "key=value" from --set.
std::pair<std::string, std::string> SplitAssignment(std::string_view text);

// Strict decimal parse; throws UsageError mentioning `what`.
double ParseNumber(std::string_view text, std::string_view what);

}  // namespace vaxgame::cli

#endif  // VAXGAME_CLI_CONFIG_H_
