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

#include "vaxgame/trajectory.h"

#include <cmath>
#include <string>

#include "vaxgame/errors.h"

namespace vaxgame {
namespace {

// (e^{kt} - e^{-delta t}) / (k + delta), evaluated without cancellation.
double ResonantKernel(double rate, double decay, double t) {
  const double gap = rate + decay;
  const double damping = std::exp(-decay * t);
  if (gap == 0.0) return t * damping;
  return damping * std::expm1(gap * t) / gap;
}

}  // namespace

std::vector<double> UniformGrid(double t_end, std::size_t points) {
  if (points < 2) throw UsageError("time grid needs at least 2 points");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw UsageError("time grid end must be positive and finite");
  }
  std::vector<double> grid(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = t_end * (static_cast<double>(i) / last);
  }
  grid.back() = t_end;
  return grid;
}

void CheckGrid(std::span<const double> grid) {
  if (grid.empty()) throw UsageError("time grid is empty");
  if (grid.front() != 0.0) throw UsageError("time grid must start at t=0");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      throw UsageError("time grid contains a non-finite point");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw UsageError("time grid must be strictly increasing (index " +
                       std::to_string(i) + ")");
    }
  }
}

TrajectoryModel::TrajectoryModel(PolicyKind policy, const ModelParams& params)
    : policy_(policy),
      params_(params),
      path_(ComputeSaddlePath(policy, params)) {
  // Efforts are affine in lambda, so their e^{kt} coefficients are the
  // difference between t = 0 and t = inf.
  const double lambda0 = path_.CostateAt(0.0);
  const double lambda_inf = path_.costate_limit;
  const Efforts start =
      EffortsFromCostate(policy, params, lambda0, 2.0 * lambda0);
  const Efforts limit =
      EffortsFromCostate(policy, params, lambda_inf, 2.0 * lambda_inf);
  quality_forcing_ = params.theta1 * (start.technology - limit.technology);
  goodwill_forcing_ =
      params.theta2 * (start.blockchain - limit.blockchain) +
      params.theta3 * (start.advertising - limit.advertising);
}

Snapshot TrajectoryModel::At(double t) const {
  const double decay = params_.delta;
  const double settle = -std::expm1(-decay * t);  // 1 - e^{-delta t}
  const double kernel = ResonantKernel(path_.rate, decay, t);
  const double quality =
      path_.quality_limit * settle + quality_forcing_ * kernel;
  const double goodwill =
      path_.goodwill_limit * settle + goodwill_forcing_ * kernel;
  return BuildSnapshot(policy_, params_, t, quality, goodwill,
                       path_.AggregateAt(t), path_.CostateAt(t));
}

TimeSeries Trajectory(PolicyKind policy, const ModelParams& params,
                      std::span<const double> grid, Execution exec) {
  CheckGrid(grid);
  const TrajectoryModel model(policy, params);
  return MapIndexed(grid.size(), exec,
                    [&](std::size_t i) { return model.At(grid[i]); });
}

TimeSeries CustomerPResponse(const ModelParams& params,
                             std::span<const double> psi_path,
                             const TimeSeries& base) {
  if (psi_path.size() != base.size()) {
    throw UsageError("psi path has " + std::to_string(psi_path.size()) +
                     " points but the base series has " +
                     std::to_string(base.size()));
  }
  TimeSeries out;
  out.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double psi = psi_path[i];
    if (!(psi >= 0.0 && psi < 1.0)) {
      throw UsageError("reimbursement psi must lie in [0, 1) at index " +
                       std::to_string(i));
    }
    const Snapshot& b = base[i];
    if (b.policy != PolicyKind::kNoSubsidy &&
        !(b.policy == PolicyKind::kCustomerP && b.subsidy == 0.0)) {
      throw UsageError("customer-p response needs a no-subsidy base series");
    }
    Snapshot s = b;
    s.policy = PolicyKind::kCustomerP;
    s.subsidy = psi;
    s.wholesale_price = b.wholesale_price / (1.0 - psi);
    s.retail_price = b.retail_price / (1.0 - psi);
    s.demand = Demand(params, s.retail_price, s.quality, s.goodwill, psi);
    const ProfitRates rates =
        ComputeProfitRates(PolicyKind::kCustomerP, params, s);
    s.government_profit = rates.government;
    s.manufacturer_profit = rates.manufacturer;
    s.retailer_profit = rates.retailer;
    out.push_back(s);
  }
  return out;
}

}  // namespace vaxgame
