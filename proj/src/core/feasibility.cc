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

#include "vaxgame/feasibility.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "vaxgame/errors.h"

namespace vaxgame {
namespace {

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

double ComputeDelta(const ModelParams& p) {
  return 2.0 * p.theta1 * p.theta1 * p.gamma1 * p.gamma1 +
         (2.0 * p.theta2 * p.theta2 + p.theta3 * p.theta3) * p.gamma2 *
             p.gamma2;
}

double StabilityBound(const ModelParams& p) {
  return 8.0 * p.beta * p.delta * (p.r + p.delta);
}

double InteriorEtaThresholdT(const ModelParams& p) {
  const double rd = p.r + p.delta;
  return 4.0 * p.alpha * p.delta * rd /
         (8.0 * p.beta * p.delta * rd - ComputeDelta(p));
}

double InteriorEtaThresholdS(const ModelParams& p) {
  const double rd = p.r + p.delta;
  return 16.0 * p.alpha * p.delta * rd /
         (16.0 * p.beta * p.delta * rd - ComputeDelta(p));
}

void CheckFieldValidity(const ModelParams& params) {
  for (std::string_view name : kParamNames) {
    const double v = ParamValue(params, name);
    if (!std::isfinite(v)) {
      throw InfeasibleError("parameter " + std::string(name) +
                            " is not finite");
    }
    const bool strictly_positive =
        name == "alpha" || name == "beta" || name == "delta" || name == "r";
    if (strictly_positive && !(v > 0.0)) {
      throw InfeasibleError("parameter " + std::string(name) +
                            " must be positive (got " + Num(v) + ")");
    }
    if (!strictly_positive && v < 0.0) {
      throw InfeasibleError("parameter " + std::string(name) +
                            " must be non-negative (got " + Num(v) + ")");
    }
  }
}

FeasibilityReport Validate(const ModelParams& params, PolicyKind policy) {
  CheckFieldValidity(params);
  FeasibilityReport report;
  report.policy = policy;
  report.delta_aggregate = ComputeDelta(params);
  report.stability_bound = StabilityBound(params);
  report.stability_ok = report.stability_bound > report.delta_aggregate;
  if (!report.stability_ok) {
    report.messages.push_back(
        "stability condition 8*beta*delta*(r+delta) > Delta violated: " +
        Num(report.stability_bound) + " <= " + Num(report.delta_aggregate));
  }
  if (policy == PolicyKind::kManufacturerQ) {
    const double threshold = InteriorEtaThresholdT(params);
    report.interior_T_ok = report.stability_ok && params.eta >= threshold;
    // Without stability the threshold has no meaning; that message suffices.
    if (report.stability_ok && !*report.interior_T_ok) {
      report.messages.push_back(
          "interior technology-subsidy condition eta >= "
          "4*alpha*delta*(r+delta)/(8*beta*delta*(r+delta)-Delta) violated: "
          "eta=" + Num(params.eta) + ", threshold=" + Num(threshold));
    }
  }
  if (policy == PolicyKind::kManufacturerD) {
    const double threshold = InteriorEtaThresholdS(params);
    // The S threshold denominator stays positive whenever 16*beta*delta*(r+d)
    // exceeds Delta, which stability implies.
    report.interior_S_ok = report.stability_ok && params.eta >= threshold;
    if (report.stability_ok && !*report.interior_S_ok) {
      report.messages.push_back(
          "interior per-dose-subsidy condition eta >= "
          "16*alpha*delta*(r+delta)/(16*beta*delta*(r+delta)-Delta) "
          "violated: eta=" + Num(params.eta) + ", threshold=" +
          Num(threshold));
    }
  }
  return report;
}

void RequireFeasible(const ModelParams& params, PolicyKind policy) {
  const FeasibilityReport report = Validate(params, policy);
  if (report.ok()) return;
  std::string what = "infeasible parameters for policy " +
                     std::string(PolicyName(policy));
  for (const std::string& m : report.messages) what += "; " + m;
  throw InfeasibleError(what);
}

}  // namespace vaxgame
