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

#ifndef VAXGAME_ANALYSIS_SWEEP_H_
#define VAXGAME_ANALYSIS_SWEEP_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vaxgame/equilibrium.h"
#include "vaxgame/parallel.h"
#include "vaxgame/params.h"

namespace vaxgame {

enum class Direction { kIncreasing, kDecreasing, kConstant, kMixed, kUndetermined };

// "increasing", "decreasing", "constant", "mixed", "undetermined".
std::string_view DirectionName(Direction direction);

// Strict direction of a sequence; kUndetermined for fewer than two values.
Direction Classify(std::span<const double> values);

struct SweepPoint {
  double value = 0.0;  // the swept parameter
  bool feasible = false;
  std::string diagnostic;  // why the point was skipped, empty if feasible
  Snapshot initial;        // t = 0
  Snapshot limit;          // t = inf
};

struct SweepSeries {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  std::vector<SweepPoint> points;  // one per grid value
};

struct MonotoneVerdict {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  std::string_view quantity;
  Direction direction = Direction::kUndetermined;
};

struct SweepResult {
  std::string parameter;
  std::vector<double> grid;
  std::vector<SweepSeries> series;
  // Direction of each steady-state quantity across the feasible points.
  std::vector<MonotoneVerdict> verdicts;
  // 4 beta delta (r+delta) > Delta at each grid point: the condition under
  // which the per-dose subsidy lowers the steady retail price as eta grows.
  std::vector<bool> price_condition;

  Direction VerdictFor(PolicyKind policy, std::string_view quantity) const;
  bool PriceConditionEverywhere() const;
  // One line per skipped point.
  std::vector<std::string> Diagnostics() const;
};

// Quantities given a verdict, in report order.
std::span<const std::string_view> SweepQuantities();

// Sets `parameter` to each grid value on top of `base` and evaluates every
// policy. Infeasible points are kept with feasible = false and excluded from
// the verdicts. Throws UsageError for an unknown parameter or a grid that is
// empty or not strictly increasing.
SweepResult RunSweep(const ModelParams& base, std::string_view parameter,
                     std::span<const double> grid,
                     std::span<const PolicyKind> policies,
                     Execution exec = Execution::kParallel);

}  // namespace vaxgame

#endif  // VAXGAME_ANALYSIS_SWEEP_H_
