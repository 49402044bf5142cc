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

#include "vaxgame/analysis/compare.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "vaxgame/errors.h"
#include "vaxgame/quantities.h"
#include "vaxgame/steady_state.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {
namespace {


ComparisonEntry Compare(std::string column, std::initializer_list<Quantity> qs,
                        std::span<const Snapshot> t, std::span<const Snapshot> s) {
  std::vector<double> t_minus_s;
  std::vector<double> s_minus_t;
  for (const Quantity& q : qs) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      t_minus_s.push_back(q(t[i]) - q(s[i]));
      s_minus_t.push_back(q(s[i]) - q(t[i]));
    }
  }
  ComparisonEntry e;
  e.column = std::move(column);
  e.manufacturer_q = SignOf(t_minus_s);
  e.manufacturer_d = SignOf(s_minus_t);
  const auto [lo, hi] = std::minmax_element(t_minus_s.begin(), t_minus_s.end());
  e.min_gap = *lo;
  e.max_gap = *hi;
  return e;
}

}  // namespace

std::string_view SignSymbol(Sign sign) {
  switch (sign) {
    case Sign::kHigher:
      return "+";
    case Sign::kLower:
      return "-";
    case Sign::kMixed:
      break;
  }
  return "mixed";
}

Sign SignOf(std::span<const double> differences) {
  if (differences.empty()) return Sign::kMixed;
  const bool all_pos = std::all_of(differences.begin(), differences.end(),
                                   [](double d) { return d > 0.0; });
  if (all_pos) return Sign::kHigher;
  const bool all_neg = std::all_of(differences.begin(), differences.end(),
                                   [](double d) { return d < 0.0; });
  return all_neg ? Sign::kLower : Sign::kMixed;
}

const ComparisonEntry& ComparisonTable::Entry(std::string_view column) const {
  for (const ComparisonEntry& e : entries) {
    if (e.column == column) return e;
  }
  throw UsageError("no comparison column named '" + std::string(column) + "'");
}

double EarlyTime(const ModelParams& params) {
  double fastest = 0.0;
  for (PolicyKind policy : kDynamicPolicies) {
    fastest = std::max(fastest, std::abs(ComputeSaddlePath(policy, params).rate));
  }
  return std::min(0.1, 1.0 / (10.0 * fastest));
}

ComparisonTable ComparePolicies(const ModelParams& params,
                                std::span<const double> grid,
                                std::optional<double> tau, Execution exec) {
  CheckGrid(grid);
  ComparisonTable table;
  table.tau = tau ? *tau : EarlyTime(params);
  if (!(table.tau > 0.0) || !std::isfinite(table.tau)) {
    throw UsageError("early comparison time tau must be positive");
  }

  const std::array<TrajectoryModel, 3> models = {
      TrajectoryModel(kDynamicPolicies[0], params),
      TrajectoryModel(kDynamicPolicies[1], params),
      TrajectoryModel(kDynamicPolicies[2], params)};
  for (std::size_t i = 0; i < models.size(); ++i) {
    table.early[i] = models[i].At(table.tau);
    table.limit[i] = ComputeSteadyState(kDynamicPolicies[i], params).limit;
  }

  std::vector<double> late{table.tau};
  for (double t : grid) {
    if (t > table.tau) late.push_back(t);
  }
  const auto sample = [&](const TrajectoryModel& model, const Snapshot& limit) {
    std::vector<Snapshot> out = MapIndexed(
        late.size(), exec, [&](std::size_t i) { return model.At(late[i]); });
    out.push_back(limit);
    return out;
  };
  const std::vector<Snapshot> t_path = sample(models[1], table.limit[1]);
  const std::vector<Snapshot> s_path = sample(models[2], table.limit[2]);

  const std::span<const Snapshot> t_early(&table.early[1], 1);
  const std::span<const Snapshot> s_early(&table.early[2], 1);
  const std::span<const Snapshot> t_limit(&table.limit[1], 1);
  const std::span<const Snapshot> s_limit(&table.limit[2], 1);

  table.entries.push_back(Compare("q,b,a",
                                  {kTechnology, kBlockchain, kAdvertising},
                                  t_path, s_path));
  table.entries.push_back(Compare("A", {kAggregate}, t_path, s_path));
  table.entries.push_back(
      Compare("omega,p", {kWholesale, kRetail}, t_path, s_path));
  table.entries.push_back(Compare("D(tau)", {kDemand}, t_early, s_early));
  table.entries.push_back(Compare("D(inf)", {kDemand}, t_limit, s_limit));
  table.entries.push_back(
      Compare("pi_G(tau)", {kGovernmentProfit}, t_early, s_early));
  table.entries.push_back(
      Compare("pi_G(inf)", {kGovernmentProfit}, t_limit, s_limit));
  return table;
}

}  // namespace vaxgame
