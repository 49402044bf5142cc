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

#include "vaxgame/params.h"

#include <string>

#include "vaxgame/errors.h"

namespace vaxgame {

ModelParams BaselineParams() {
  ModelParams p;
  p.alpha = 18.0;
  p.beta = 7.0;
  p.theta1 = 1.0;
  p.theta2 = 0.5;
  p.theta3 = 0.8;
  p.gamma1 = 0.3;
  p.gamma2 = 0.2;
  p.eta = 7.0;
  p.delta = 0.1;
  p.r = 0.03;
  return p;
}

double& ParamRef(ModelParams& params, std::string_view name) {
  if (name == "alpha") return params.alpha;
  if (name == "beta") return params.beta;
  if (name == "theta1") return params.theta1;
  if (name == "theta2") return params.theta2;
  if (name == "theta3") return params.theta3;
  if (name == "gamma1") return params.gamma1;
  if (name == "gamma2") return params.gamma2;
  if (name == "eta") return params.eta;
  if (name == "delta") return params.delta;
  if (name == "r") return params.r;
  throw UsageError("unknown model parameter '" + std::string(name) + "'");
}

double ParamValue(const ModelParams& params, std::string_view name) {
  ModelParams copy = params;
  return ParamRef(copy, name);
}

bool IsParamName(std::string_view name) {
  for (std::string_view known : kParamNames) {
    if (known == name) return true;
  }
  return false;
}

std::string_view PolicyName(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::kNoSubsidy:
      return "none";
    case PolicyKind::kManufacturerQ:
      return "manu-q";
    case PolicyKind::kManufacturerD:
      return "manu-d";
    case PolicyKind::kCustomerP:
      return "customer-p";
  }
  return "?";
}

PolicyKind ParsePolicy(std::string_view name) {
  if (name == "none") return PolicyKind::kNoSubsidy;
  if (name == "manu-q" || name == "T") return PolicyKind::kManufacturerQ;
  if (name == "manu-d" || name == "S") return PolicyKind::kManufacturerD;
  if (name == "customer-p") return PolicyKind::kCustomerP;
  throw UsageError("unknown policy '" + std::string(name) +
                   "' (expected none, manu-q, manu-d or customer-p)");
}

bool HasSubsidyControl(PolicyKind policy) {
  return policy == PolicyKind::kManufacturerQ ||
         policy == PolicyKind::kManufacturerD;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return 1;
    case ErrorKind::kInfeasible:
    case ErrorKind::kRegime:
      return 2;
    case ErrorKind::kNonConvergence:
      return 3;
  }
  return 1;
}

}  // namespace vaxgame
