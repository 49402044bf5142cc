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

#ifndef VAXGAME_ANALYSIS_BLOCKCHAIN_H_
#define VAXGAME_ANALYSIS_BLOCKCHAIN_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vaxgame/parallel.h"
#include "vaxgame/params.h"

namespace vaxgame {

struct QuantityGap {
  std::string_view name;
  double min_gap = 0.0;  // smallest (with - without) over grid points t > 0
  bool strictly_larger = false;
};

// No-subsidy paths with the given theta2 against the same parameters with
// theta2 = 0.
struct BlockchainImpact {
  std::vector<double> grid;
  std::vector<QuantityGap> gaps;  // q, b, a, Q, G, D, omega, p
  std::vector<double> profit_gap;  // pi_M(with) - pi_M(without) per point
  // Time after which the manufacturer's profit gap stays positive, refined
  // by bisection on the closed form; empty if it is not positive by the end
  // of the grid.
  std::optional<double> crossover;

  bool AllLarger() const;
};

// Throws UsageError if theta2 is not positive, plus the usual feasibility
// errors for either configuration.
BlockchainImpact BlockchainEffect(const ModelParams& params,
                                  std::span<const double> grid,
                                  Execution exec = Execution::kParallel);

// True when b(t) under the no-subsidy policy increases strictly with theta2
// at every grid point, for theta2 taking the (increasing) values given.
bool BlockchainEffortIncreasing(const ModelParams& params,
                                std::span<const double> theta2_values,
                                std::span<const double> grid);

}  // namespace vaxgame

#endif  // VAXGAME_ANALYSIS_BLOCKCHAIN_H_
