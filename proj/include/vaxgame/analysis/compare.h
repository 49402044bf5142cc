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

#ifndef VAXGAME_ANALYSIS_COMPARE_H_
#define VAXGAME_ANALYSIS_COMPARE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vaxgame/equilibrium.h"
#include "vaxgame/parallel.h"
#include "vaxgame/params.h"

namespace vaxgame {

enum class Sign { kHigher, kLower, kMixed };

// "+", "-" or "mixed".
std::string_view SignSymbol(Sign sign);

// Sign shared by every difference, kMixed if they disagree or any is zero.
Sign SignOf(std::span<const double> differences);

struct ComparisonEntry {
  std::string column;  // "q,b,a", "A", "omega,p", "D(tau)", ...
  Sign manufacturer_q = Sign::kMixed;  // sign of manu-q minus manu-d
  Sign manufacturer_d = Sign::kMixed;  // sign of manu-d minus manu-q
  double min_gap = 0.0;  // smallest manu-q minus manu-d over the points used
  double max_gap = 0.0;
};

struct ComparisonTable {
  double tau = 0.0;
  std::vector<ComparisonEntry> entries;
  // none, manu-q, manu-d (indexed like kDynamicPolicies) at tau and t = inf.
  std::array<Snapshot, 3> early;
  std::array<Snapshot, 3> limit;

  const ComparisonEntry& Entry(std::string_view column) const;
};

// min(0.1, |1/(10 k)|) for the fastest-decaying dynamic policy.
double EarlyTime(const ModelParams& params);

// Evaluates the no-subsidy and both manufacturer policies. Columns whose
// claim is about the whole path (q,b,a / A / omega,p) use every grid point
// with t >= tau plus the limit; D and pi_G use tau and the limit separately.
// Throws InfeasibleError or RegimeError if any of the three is infeasible.
ComparisonTable ComparePolicies(const ModelParams& params,
                                std::span<const double> grid,
                                std::optional<double> tau = std::nullopt,
                                Execution exec = Execution::kParallel);

}  // namespace vaxgame

#endif  // VAXGAME_ANALYSIS_COMPARE_H_
