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

#ifndef VAXGAME_ANALYSIS_PROPOSITIONS_H_
#define VAXGAME_ANALYSIS_PROPOSITIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vaxgame/params.h"

namespace vaxgame {

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string_view CheckStatusName(CheckStatus status);  // pass, fail, n/a

// One checkable inequality about the three models. The precondition is
// evaluated first and reported alongside the inequality itself; the
// inequality is still evaluated when the precondition fails, for reference.
struct PropositionCheck {
  std::string id;            // "9(1)", "12(2)", ...
  std::string claim;         // the inequality, in plain ASCII
  std::string precondition;  // what must hold for the claim to apply
  bool precondition_holds = false;
  bool holds = false;
  std::string detail;  // the numbers on each side

  CheckStatus status() const;
};

// alpha (16 beta delta (r+delta) + Delta) / (2 beta (8 beta delta (r+delta)
// - Delta)): above this eta the per-dose subsidy raises steady demand over
// the no-subsidy level.
double DemandEtaThreshold(const ModelParams& params);

// "eta sufficiently large": twice DemandEtaThreshold.
double LargeEtaThreshold(const ModelParams& params);

// n = Delta / (8 beta delta (r + delta)).
double StabilityRatio(const ModelParams& params);

// Evaluates every steady-state and early-time ordering between the
// no-subsidy, manu-q and manu-d models. `tau` defaults to EarlyTime(params).
// Never throws for infeasible parameters: affected checks report a failed
// precondition naming the reason.
std::vector<PropositionCheck> PropositionSuite(
    const ModelParams& params, std::optional<double> tau = std::nullopt);

}  // namespace vaxgame

#endif  // VAXGAME_ANALYSIS_PROPOSITIONS_H_
