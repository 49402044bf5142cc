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

#ifndef VAXGAME_FEASIBILITY_H_
#define VAXGAME_FEASIBILITY_H_

#include <optional>
#include <string>
#include <vector>

#include "vaxgame/params.h"

namespace vaxgame {

// Effort-channel strength 2*theta1^2*gamma1^2 + (2*theta2^2 + theta3^2)*gamma2^2.
double ComputeDelta(const ModelParams& params);

// 8*beta*delta*(r+delta); stability requires it to exceed ComputeDelta().
double StabilityBound(const ModelParams& params);

// Smallest eta keeping the technology subsidy positive at steady state:
// 4*alpha*delta*(r+delta) / (8*beta*delta*(r+delta) - Delta).
double InteriorEtaThresholdT(const ModelParams& params);

// Smallest eta keeping the per-dose subsidy positive at steady state:
// 16*alpha*delta*(r+delta) / (16*beta*delta*(r+delta) - Delta).
double InteriorEtaThresholdS(const ModelParams& params);

struct FeasibilityReport {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  double delta_aggregate = 0.0;
  double stability_bound = 0.0;
  bool stability_ok = false;
  // Present only when `policy` carries the matching subsidy control.
  std::optional<bool> interior_T_ok;
  std::optional<bool> interior_S_ok;
  std::vector<std::string> messages;

  bool ok() const {
    return stability_ok && interior_T_ok.value_or(true) &&
           interior_S_ok.value_or(true);
  }
};

// Throws InfeasibleError naming the first non-finite or out-of-range symbol.
// alpha, beta, delta, r must be positive; eta, theta*, gamma* non-negative.
void CheckFieldValidity(const ModelParams& params);

// Field validity is enforced by throwing; the stability and interior
// conditions are reported, not thrown.
FeasibilityReport Validate(const ModelParams& params, PolicyKind policy);

// Validate() and throw InfeasibleError naming the violated condition.
void RequireFeasible(const ModelParams& params, PolicyKind policy);

}  // namespace vaxgame

#endif  // VAXGAME_FEASIBILITY_H_
