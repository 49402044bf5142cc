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

#ifndef VAXGAME_ANALYSIS_THRESHOLD_H_
#define VAXGAME_ANALYSIS_THRESHOLD_H_

#include <optional>
#include <string_view>

#include "vaxgame/params.h"

namespace vaxgame {

enum class ProfitTarget { kGovernment, kManufacturer };

std::string_view ProfitTargetName(ProfitTarget target);  // "government", ...
ProfitTarget ParseProfitTarget(std::string_view name);   // UsageError if unknown

// Limiting values of beta * delta^2 / rho^2 above which the per-dose subsidy
// beats the technology subsidy in steady-state profit (r -> 0, large eta).
inline constexpr double kGovernmentCrossing = 1.04462;
inline constexpr double kManufacturerCrossing = 0.68255;

double AnalyticCrossing(ProfitTarget target);  // one of the two above

struct ThresholdQuery {
  double rho = 0.3;    // gamma1 theta1 = gamma2 theta2 = gamma2 theta3
  double delta = 0.1;
  ProfitTarget target = ProfitTarget::kGovernment;
  double r = 1e-6;
  double alpha = 18.0;
  // Defaults to 1e4 * alpha * delta^2 / rho^2, large enough that the
  // alpha / (beta eta) corrections stay around 1e-4 across the bracket.
  std::optional<double> eta;
  // Bracket in units of rho^2 / delta^2.
  double bracket_low = 0.64;  // stability needs beta > 0.625 rho^2/delta^2
  double bracket_high = 2.0;
  double tolerance = 1e-6;  // absolute, in beta
  int max_iters = 80;
};

struct ThresholdResult {
  ProfitTarget target = ProfitTarget::kGovernment;
  double rho = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double eta = 0.0;
  double crossing = 0.0;      // beta at the sign change
  double bracket_low = 0.0;   // final bracket in beta
  double bracket_high = 0.0;
  double gap_low = 0.0;       // S minus T steady profit at the bracket ends
  double gap_high = 0.0;
  double analytic = 0.0;      // constant * rho^2 / delta^2
  double relative_gap = 0.0;  // |crossing - analytic| / analytic
  int iterations = 0;
};

// gamma1 = gamma2 = 1, theta1 = theta2 = theta3 = rho; other fields as given.
ModelParams SymmetricParams(double rho, double delta, double beta, double eta,
                            double alpha, double r);

// Steady-state profit under manu-d minus manu-q for the chosen party.
double SteadyProfitGap(const ModelParams& params, ProfitTarget target);

// Bisection on beta of the sign of SteadyProfitGap. Throws UsageError for a
// malformed query and RegimeError (listing the endpoint gaps) when the
// initial bracket holds no sign change. Deterministic.
ThresholdResult FindBetaCrossing(const ThresholdQuery& query);

struct ThresholdDrift {
  ThresholdResult reference;  // at query.r
  ThresholdResult perturbed;  // at the alternative r
  double drift = 0.0;         // relative change of the crossing
};

ThresholdDrift CrossingDrift(const ThresholdQuery& query, double alt_r = 1e-5);

}  // namespace vaxgame

#endif  // VAXGAME_ANALYSIS_THRESHOLD_H_
