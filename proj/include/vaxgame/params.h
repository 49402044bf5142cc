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

#ifndef VAXGAME_PARAMS_H_
#define VAXGAME_PARAMS_H_

#include <array>
#include <string>
#include <string_view>

namespace vaxgame {

// Scalar primitives of the three-tier vaccine supply chain game. Quality and
// goodwill share the single decay rate `delta`.
struct ModelParams {
  double alpha = 0.0;   // market capacity (doses/time)
  double beta = 0.0;    // price sensitivity (doses/time per currency)
  double theta1 = 0.0;  // technology effort -> quality
  double theta2 = 0.0;  // blockchain effort -> goodwill
  double theta3 = 0.0;  // advertising effort -> goodwill
  double gamma1 = 0.0;  // quality -> demand
  double gamma2 = 0.0;  // goodwill -> demand
  double eta = 0.0;     // government marginal sales revenue (currency/dose)
  double delta = 0.0;   // decay rate of quality and goodwill (1/time)
  double r = 0.0;       // continuous discount rate (1/time)

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// The reference parameterization used throughout the numerical experiments:
// alpha=18, beta=7, theta=(1, 0.5, 0.8), gamma=(0.3, 0.2), eta=7, delta=0.1,
// r=0.03.
ModelParams BaselineParams();

// Config-file symbol names, in canonical output order.
inline constexpr std::array<std::string_view, 10> kParamNames = {
    "alpha",  "beta",   "theta1", "theta2", "theta3",
    "gamma1", "gamma2", "eta",    "delta",  "r"};

// Field access by symbol name. Throws UsageError for an unknown symbol.
double& ParamRef(ModelParams& params, std::string_view name);
double ParamValue(const ModelParams& params, std::string_view name);
bool IsParamName(std::string_view name);

enum class PolicyKind {
  kNoSubsidy,
  kManufacturerQ,  // proportional subsidy of technology cost, "Policy (T)"
  kManufacturerD,  // per-dose subsidy on sales volume, "Policy (S)"
  kCustomerP,      // proportional reimbursement of the retail price
};

inline constexpr std::array<PolicyKind, 4> kAllPolicies = {
    PolicyKind::kNoSubsidy, PolicyKind::kManufacturerQ,
    PolicyKind::kManufacturerD, PolicyKind::kCustomerP};

// The three policies with their own equilibrium dynamics.
inline constexpr std::array<PolicyKind, 3> kDynamicPolicies = {
    PolicyKind::kNoSubsidy, PolicyKind::kManufacturerQ,
    PolicyKind::kManufacturerD};

// CLI spelling: "none", "manu-q", "manu-d", "customer-p".
std::string_view PolicyName(PolicyKind policy);
// Accepts the CLI spelling plus the aliases "T" and "S". Throws UsageError.
PolicyKind ParsePolicy(std::string_view name);

bool HasSubsidyControl(PolicyKind policy);

}  // namespace vaxgame

#endif  // VAXGAME_PARAMS_H_
