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

#include "vaxgame/analysis/threshold.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "vaxgame/errors.h"
#include "vaxgame/steady_state.h"

namespace vaxgame {

std::string_view ProfitTargetName(ProfitTarget target) {
  return target == ProfitTarget::kGovernment ? "government" : "manufacturer";
}

ProfitTarget ParseProfitTarget(std::string_view name) {
  if (name == "government" || name == "G") return ProfitTarget::kGovernment;
  if (name == "manufacturer" || name == "M") return ProfitTarget::kManufacturer;
  throw UsageError("unknown profit target '" + std::string(name) +
                   "' (expected government or manufacturer)");
}

double AnalyticCrossing(ProfitTarget target) {
  return target == ProfitTarget::kGovernment ? kGovernmentCrossing
                                             : kManufacturerCrossing;
}

ModelParams SymmetricParams(double rho, double delta, double beta, double eta,
                            double alpha, double r) {
  ModelParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.theta1 = p.theta2 = p.theta3 = rho;
  p.gamma1 = p.gamma2 = 1.0;
  p.eta = eta;
  p.delta = delta;
  p.r = r;
  return p;
}

double SteadyProfitGap(const ModelParams& params, ProfitTarget target) {
  const Snapshot s = ComputeSteadyState(PolicyKind::kManufacturerD, params).limit;
  const Snapshot t = ComputeSteadyState(PolicyKind::kManufacturerQ, params).limit;
  return target == ProfitTarget::kGovernment
             ? s.government_profit - t.government_profit
             : s.manufacturer_profit - t.manufacturer_profit;
}

ThresholdResult FindBetaCrossing(const ThresholdQuery& q) {
  if (!(q.rho > 0.0) || !(q.delta > 0.0) || !(q.r > 0.0) || !(q.alpha > 0.0)) {
    throw UsageError("threshold search needs rho, delta, r, alpha > 0");
  }
  if (!(q.bracket_low > 0.0 && q.bracket_high > q.bracket_low)) {
    throw UsageError("threshold bracket must satisfy 0 < low < high");
  }
  if (!(q.tolerance > 0.0) || q.max_iters < 1) {
    throw UsageError("threshold tolerance and max_iters must be positive");
  }
  const double scale = q.rho * q.rho / (q.delta * q.delta);
  const double eta = q.eta ? *q.eta : 1e4 * q.alpha / scale;

  const auto gap = [&](double beta) {
    return SteadyProfitGap(SymmetricParams(q.rho, q.delta, beta, eta, q.alpha, q.r),
                           q.target);
  };

  ThresholdResult res;
  res.target = q.target;
  res.rho = q.rho;
  res.delta = q.delta;
  res.r = q.r;
  res.eta = eta;
  res.analytic = AnalyticCrossing(q.target) * scale;

  double lo = q.bracket_low * scale;
  double hi = q.bracket_high * scale;
  double g_lo = gap(lo);
  double g_hi = gap(hi);
  if (!(g_lo < 0.0 && g_hi > 0.0) && !(g_lo > 0.0 && g_hi < 0.0)) {
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "no sign change of the %s profit gap in beta bracket "
                  "[%.9g, %.9g]: gap %.9g at low end, %.9g at high end",
                  std::string(ProfitTargetName(q.target)).c_str(), lo, hi,
                  g_lo, g_hi);
    throw RegimeError(buf);
  }
  int iter = 0;
  while (hi - lo > q.tolerance && iter < q.max_iters) {
    const double mid = 0.5 * (lo + hi);
    const double g = gap(mid);
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
      g_hi = g;
    }
    ++iter;
  }
  res.bracket_low = lo;
  res.bracket_high = hi;
  res.gap_low = g_lo;
  res.gap_high = g_hi;
  res.crossing = 0.5 * (lo + hi);
  res.iterations = iter;
  res.relative_gap = std::abs(res.crossing - res.analytic) / res.analytic;
  return res;
}

ThresholdDrift CrossingDrift(const ThresholdQuery& query, double alt_r) {
  ThresholdDrift d;
  d.reference = FindBetaCrossing(query);
  ThresholdQuery alt = query;
  alt.r = alt_r;
  d.perturbed = FindBetaCrossing(alt);
  d.drift = std::abs(d.perturbed.crossing - d.reference.crossing) /
            d.reference.crossing;
  return d;
}

}  // namespace vaxgame
