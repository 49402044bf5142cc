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

#include "vaxgame/analysis/sweep.h"

#include <array>
#include <cmath>
#include <cstdio>

#include "vaxgame/errors.h"
#include "vaxgame/feasibility.h"
#include "vaxgame/quantities.h"
#include "vaxgame/steady_state.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {
namespace {

constexpr std::array<Quantity, 13> kVerdictQuantities = {
    kQuality,    kGoodwill,   kAggregate,  kTechnology, kBlockchain,
    kAdvertising, kWholesale, kRetail,     kSubsidy,    kDemand,
    kGovernmentProfit, kManufacturerProfit, kRetailerProfit};

constexpr std::array<std::string_view, 13> kVerdictNames = [] {
  std::array<std::string_view, 13> names{};
  for (std::size_t i = 0; i < names.size(); ++i) {
    names[i] = kVerdictQuantities[i].name;
  }
  return names;
}();

SweepPoint Evaluate(PolicyKind policy, const ModelParams& params,
                    double value) {
  SweepPoint point;
  point.value = value;
  try {
    const TrajectoryModel model(policy, params);
    point.initial = model.At(0.0);
    point.limit = ComputeSteadyState(policy, params).limit;
    point.feasible = true;
  } catch (const Error& e) {
    point.diagnostic = e.what();
  }
  return point;
}

}  // namespace

std::string_view DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kIncreasing:
      return "increasing";
    case Direction::kDecreasing:
      return "decreasing";
    case Direction::kConstant:
      return "constant";
    case Direction::kMixed:
      return "mixed";
    case Direction::kUndetermined:
      break;
  }
  return "undetermined";
}

Direction Classify(std::span<const double> values) {
  if (values.size() < 2) return Direction::kUndetermined;
  bool up = true, down = true, flat = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    up = up && values[i] > values[i - 1];
    down = down && values[i] < values[i - 1];
    flat = flat && values[i] == values[i - 1];
  }
  if (up) return Direction::kIncreasing;
  if (down) return Direction::kDecreasing;
  if (flat) return Direction::kConstant;
  return Direction::kMixed;
}

std::span<const std::string_view> SweepQuantities() { return kVerdictNames; }

Direction SweepResult::VerdictFor(PolicyKind policy,
                                  std::string_view quantity) const {
  for (const MonotoneVerdict& v : verdicts) {
    if (v.policy == policy && v.quantity == quantity) return v.direction;
  }
  throw UsageError("no sweep verdict for " + std::string(PolicyName(policy)) +
                   "/" + std::string(quantity));
}

bool SweepResult::PriceConditionEverywhere() const {
  for (bool holds : price_condition) {
    if (!holds) return false;
  }
  return !price_condition.empty();
}

std::vector<std::string> SweepResult::Diagnostics() const {
  std::vector<std::string> lines;
  for (const SweepSeries& s : series) {
    for (const SweepPoint& p : s.points) {
      if (p.feasible) continue;
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%s=%.12g", parameter.c_str(), p.value);
      lines.push_back("skipped " + std::string(PolicyName(s.policy)) + " at " +
                      buf + ": " + p.diagnostic);
    }
  }
  return lines;
}

SweepResult RunSweep(const ModelParams& base, std::string_view parameter,
                     std::span<const double> grid,
                     std::span<const PolicyKind> policies, Execution exec) {
  if (!IsParamName(parameter)) {
    throw UsageError("unknown sweep parameter '" + std::string(parameter) + "'");
  }
  if (grid.empty()) throw UsageError("sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw UsageError("sweep grid must be finite and strictly increasing");
    }
  }
  if (policies.empty()) throw UsageError("sweep needs at least one policy");

  SweepResult result;
  result.parameter = std::string(parameter);
  result.grid.assign(grid.begin(), grid.end());

  std::vector<ModelParams> points(grid.size(), base);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ParamRef(points[i], parameter) = grid[i];
    const ModelParams& p = points[i];
    result.price_condition.push_back(4.0 * p.beta * p.delta * (p.r + p.delta) >
                                     ComputeDelta(p));
  }

  const std::size_t n = grid.size();
  const std::vector<SweepPoint> flat =
      MapIndexed(n * policies.size(), exec, [&](std::size_t k) {
        return Evaluate(policies[k / n], points[k % n], grid[k % n]);
      });
  for (std::size_t j = 0; j < policies.size(); ++j) {
    SweepSeries s;
    s.policy = policies[j];
    s.points.assign(flat.begin() + static_cast<std::ptrdiff_t>(j * n),
                    flat.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    for (const Quantity& q : kVerdictQuantities) {
      std::vector<double> values;
      for (const SweepPoint& p : s.points) {
        if (p.feasible) values.push_back(q(p.limit));
      }
      result.verdicts.push_back({s.policy, q.name, Classify(values)});
    }
    result.series.push_back(std::move(s));
  }
  return result;
}

}  // namespace vaxgame
