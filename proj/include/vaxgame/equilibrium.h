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

///////////////////////////////////////////////////////////////////////////////
//
// Open-loop equilibrium closures. Given the state (quality Q, goodwill G,
// aggregate A = gamma1*Q + gamma2*G) and the retailer costate lambda, every
// price, effort, subsidy, demand and profit rate follows in closed form. In
// the interior regime the manufacturer costate is mu = 2*lambda.
//
// BuildSnapshot() is the single code path used by both the steady state and
// the time-dependent trajectory, so the two always agree bit-for-bit when
// fed the same (Q, G, A, lambda).
//
///////////////////////////////////////////////////////////////////////////////

#ifndef VAXGAME_EQUILIBRIUM_H_
#define VAXGAME_EQUILIBRIUM_H_

#include "vaxgame/params.h"

namespace vaxgame {

// Full decision and profit picture at one instant.
struct Snapshot {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  double t = 0.0;
  double quality = 0.0;    // Q
  double goodwill = 0.0;   // G
  double aggregate = 0.0;  // A = gamma1*Q + gamma2*G
  double lambda = 0.0;     // retailer shadow price
  double mu = 0.0;         // manufacturer shadow price
  double technology = 0.0;   // q
  double blockchain = 0.0;   // b
  double advertising = 0.0;  // a
  double wholesale_price = 0.0;  // omega
  double retail_price = 0.0;     // p
  // phi for manu-q (fraction), F for manu-d (currency/dose), psi for
  // customer-p (fraction), 0 without subsidy.
  double subsidy = 0.0;
  double demand = 0.0;  // D (doses/time)
  double government_profit = 0.0;    // pi_G
  double manufacturer_profit = 0.0;  // pi_M
  double retailer_profit = 0.0;      // pi_R

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct Prices {
  double wholesale = 0.0;
  double retail = 0.0;
};

struct Efforts {
  double technology = 0.0;
  double blockchain = 0.0;
  double advertising = 0.0;
};

struct SubsidyControl {
  double value = 0.0;
  bool clamped = false;  // the positive-part clamp binds
};

struct ProfitRates {
  double government = 0.0;
  double manufacturer = 0.0;
  double retailer = 0.0;
};

// omega=(alpha+A)/(2 beta), p=3(alpha+A)/(4 beta) without a per-dose subsidy;
// omega=(3(alpha+A)-eta beta)/(4 beta), p=(7(alpha+A)-eta beta)/(8 beta)
// under manu-d. Customer-p divides the no-subsidy prices by (1 - psi).
// Throws RegimeError for manu-d when eta*beta <= alpha + A (F clamps to 0).
Prices PricesFromState(PolicyKind policy, const ModelParams& params,
                       double aggregate, double psi = 0.0);

// Interior-branch efforts. Throws UsageError for negative costates.
Efforts EffortsFromCostate(PolicyKind policy, const ModelParams& params,
                           double lambda, double mu);

// phi = [1 - 4(r+delta) mu / (eta + 2(r+delta) mu)]^+ for manu-q,
// F = [(eta beta - (alpha + A)) / (2 beta)]^+ for manu-d. UsageError for the
// policies without a subsidy control.
SubsidyControl ComputeSubsidy(PolicyKind policy, const ModelParams& params,
                              double aggregate, double mu);

// D = alpha - beta (1 - psi) p + gamma1 Q + gamma2 G. May be negative.
double Demand(const ModelParams& params, double price, double quality,
              double goodwill, double psi = 0.0);

// Policy-matched profit triple read off a snapshot. Throws UsageError when
// snapshot.policy differs from `policy`.
ProfitRates ComputeProfitRates(PolicyKind policy, const ModelParams& params,
                               const Snapshot& snapshot);

// Evaluates every closure at one state. `psi` is only read for customer-p.
// Throws RegimeError when a subsidy clamp binds.
Snapshot BuildSnapshot(PolicyKind policy, const ModelParams& params, double t,
                       double quality, double goodwill, double aggregate,
                       double lambda, double psi = 0.0);

}  // namespace vaxgame

#endif  // VAXGAME_EQUILIBRIUM_H_
