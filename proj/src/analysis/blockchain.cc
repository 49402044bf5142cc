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

#include "vaxgame/analysis/blockchain.h"

#include <algorithm>
#include <array>
#include <limits>

#include "vaxgame/errors.h"
#include "vaxgame/quantities.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {

bool BlockchainImpact::AllLarger() const {
  return !gaps.empty() &&
         std::all_of(gaps.begin(), gaps.end(),
                     [](const QuantityGap& g) { return g.strictly_larger; });
}

BlockchainImpact BlockchainEffect(const ModelParams& params,
                                  std::span<const double> grid,
                                  Execution exec) {
  if (!(params.theta2 > 0.0)) {
    throw UsageError("blockchain comparison needs theta2 > 0");
  }
  CheckGrid(grid);
  ModelParams without = params;
  without.theta2 = 0.0;
  const TrajectoryModel with_model(PolicyKind::kNoSubsidy, params);
  const TrajectoryModel without_model(PolicyKind::kNoSubsidy, without);
  const TimeSeries with_path = Trajectory(PolicyKind::kNoSubsidy, params, grid, exec);
  const TimeSeries without_path =
      Trajectory(PolicyKind::kNoSubsidy, without, grid, exec);

  BlockchainImpact out;
  out.grid.assign(grid.begin(), grid.end());
  constexpr std::array<Quantity, 8> kCompared = {
      kTechnology, kBlockchain, kAdvertising, kQuality,
      kGoodwill,   kDemand,     kWholesale,   kRetail};
  for (const Quantity& q : kCompared) {
    QuantityGap g{q.name, std::numeric_limits<double>::infinity(), false};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] > 0.0) g.min_gap = std::min(g.min_gap, q(with_path[i]) - q(without_path[i]));
    }
    g.strictly_larger = g.min_gap > 0.0 && g.min_gap != std::numeric_limits<double>::infinity();
    out.gaps.push_back(g);
  }

  out.profit_gap.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.profit_gap[i] =
        with_path[i].manufacturer_profit - without_path[i].manufacturer_profit;
  }
  if (out.profit_gap.back() <= 0.0) return out;

  // Last grid interval where the gap is non-positive on the left.
  std::size_t last = grid.size();
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (out.profit_gap[i] <= 0.0) {
      last = i;
      break;
    }
  }
  if (last == grid.size()) {
    out.crossover = 0.0;
    return out;
  }
  const auto gap_at = [&](double t) {
    return with_model.At(t).manufacturer_profit -
           without_model.At(t).manufacturer_profit;
  };
  double lo = grid[last];
  double hi = grid[last + 1];
  for (int iter = 0; iter < 100 && hi - lo > 1e-12 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (gap_at(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.crossover = hi;
  return out;
}

bool BlockchainEffortIncreasing(const ModelParams& params,
                                std::span<const double> theta2_values,
                                std::span<const double> grid) {
  CheckGrid(grid);
  std::vector<TimeSeries> paths;
  for (double theta2 : theta2_values) {
    ModelParams p = params;
    p.theta2 = theta2;
    paths.push_back(Trajectory(PolicyKind::kNoSubsidy, p, grid));
  }
  for (std::size_t k = 1; k < paths.size(); ++k) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!(paths[k][i].blockchain > paths[k - 1][i].blockchain)) return false;
    }
  }
  return true;
}

}  // namespace vaxgame
