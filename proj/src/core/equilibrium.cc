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

#include "vaxgame/equilibrium.h"

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

void CheckReimbursement(double psi) {
  if (!(psi >= 0.0 && psi < 1.0)) {
    throw UsageError("reimbursement fraction psi must lie in [0, 1), got " +
                     Num(psi));
  }
}

}  // namespace

Prices PricesFromState(PolicyKind policy, const ModelParams& params,
                       double aggregate, double psi) {
  const double market = params.alpha + aggregate;
  const double beta = params.beta;
  switch (policy) {
    case PolicyKind::kNoSubsidy:
    case PolicyKind::kManufacturerQ:
      return {market / (2.0 * beta), 3.0 * market / (4.0 * beta)};
    case PolicyKind::kManufacturerD: {
      const double eta_beta = params.eta * beta;
      if (eta_beta <= market) {
        throw RegimeError(
            "per-dose subsidy F clamps to zero (eta*beta=" + Num(eta_beta) +
            " <= alpha+A=" + Num(market) +
            "); the boundary regime is not modelled");
      }
      return {(3.0 * market - eta_beta) / (4.0 * beta),
              (7.0 * market - eta_beta) / (8.0 * beta)};
    }
    case PolicyKind::kCustomerP: {
      CheckReimbursement(psi);
      const double scale = 1.0 / (1.0 - psi);
      return {scale * market / (2.0 * beta),
              scale * 3.0 * market / (4.0 * beta)};
    }
  }
  throw UsageError("unhandled policy");
}

Efforts EffortsFromCostate(PolicyKind policy, const ModelParams& params,
                           double lambda, double mu) {
  if (lambda < 0.0 || mu < 0.0) {
    throw UsageError("costates must be non-negative (lambda=" + Num(lambda) +
                     ", mu=" + Num(mu) + ")");
  }
  const double tech_gain = params.gamma1 * params.theta1;
  Efforts e;
  e.blockchain = params.gamma2 * params.theta2 * mu;
  e.advertising = params.gamma2 * params.theta3 * lambda;
  if (policy == PolicyKind::kManufacturerQ) {
    e.technology = tech_gain * (0.5 * mu +
                                params.eta / (4.0 * (params.r + params.delta)));
  } else {
    e.technology = tech_gain * mu;
  }
  return e;
}

SubsidyControl ComputeSubsidy(PolicyKind policy, const ModelParams& params,
                              double aggregate, double mu) {
  double raw = 0.0;
  if (policy == PolicyKind::kManufacturerQ) {
    const double rd = params.r + params.delta;
    const double denom = params.eta + 2.0 * rd * mu;
    // eta = mu = 0 leaves nothing to subsidize.
    if (denom <= 0.0) return {0.0, true};
    raw = 1.0 - 4.0 * rd * mu / denom;
  } else if (policy == PolicyKind::kManufacturerD) {
    raw = (params.eta * params.beta - (params.alpha + aggregate)) /
          (2.0 * params.beta);
  } else {
    throw UsageError("policy " + std::string(PolicyName(policy)) +
                     " has no subsidy control");
  }
  if (raw <= 0.0) return {0.0, true};
  return {raw, false};
}

double Demand(const ModelParams& params, double price, double quality,
              double goodwill, double psi) {
  return params.alpha - params.beta * (1.0 - psi) * price +
         params.gamma1 * quality + params.gamma2 * goodwill;
}

ProfitRates ComputeProfitRates(PolicyKind policy, const ModelParams& params,
                               const Snapshot& s) {
  if (s.policy != policy) {
    throw UsageError("snapshot belongs to policy " +
                     std::string(PolicyName(s.policy)) + ", not " +
                     std::string(PolicyName(policy)));
  }
  const double d = s.demand;
  const double q2 = 0.5 * s.technology * s.technology;
  const double b2 = 0.5 * s.blockchain * s.blockchain;
  const double a2 = 0.5 * s.advertising * s.advertising;
  ProfitRates rates;
  rates.retailer = d * (s.retail_price - s.wholesale_price) - a2;
  switch (policy) {
    case PolicyKind::kNoSubsidy:
      rates.government = params.eta * d;
      rates.manufacturer = d * s.wholesale_price - q2 - b2;
      break;
    case PolicyKind::kManufacturerQ:
      rates.government = params.eta * d - s.subsidy * q2;
      rates.manufacturer = d * s.wholesale_price - (1.0 - s.subsidy) * q2 - b2;
      break;
    case PolicyKind::kManufacturerD:
      rates.government = (params.eta - s.subsidy) * d;
      rates.manufacturer = d * (s.wholesale_price + s.subsidy) - q2 - b2;
      break;
    case PolicyKind::kCustomerP:
      rates.government = (params.eta - s.subsidy * s.retail_price) * d;
      rates.manufacturer = d * s.wholesale_price - q2 - b2;
      break;
  }
  return rates;
}

Snapshot BuildSnapshot(PolicyKind policy, const ModelParams& params, double t,
                       double quality, double goodwill, double aggregate,
                       double lambda, double psi) {
  Snapshot s;
  s.policy = policy;
  s.t = t;
  s.quality = quality;
  s.goodwill = goodwill;
  s.aggregate = aggregate;
  s.lambda = lambda;
  s.mu = 2.0 * lambda;

  const Efforts efforts = EffortsFromCostate(policy, params, s.lambda, s.mu);
  s.technology = efforts.technology;
  s.blockchain = efforts.blockchain;
  s.advertising = efforts.advertising;

  const Prices prices = PricesFromState(policy, params, aggregate, psi);
  s.wholesale_price = prices.wholesale;
  s.retail_price = prices.retail;

  if (HasSubsidyControl(policy)) {
    const SubsidyControl control =
        ComputeSubsidy(policy, params, aggregate, s.mu);
    if (control.clamped) {
      throw RegimeError("subsidy of policy " +
                        std::string(PolicyName(policy)) +
                        " clamps to zero at t=" + Num(t) +
                        "; only the interior regime is modelled");
    }
    s.subsidy = control.value;
  } else if (policy == PolicyKind::kCustomerP) {
    s.subsidy = psi;
  }

  s.demand = Demand(params, s.retail_price, quality, goodwill,
                    policy == PolicyKind::kCustomerP ? psi : 0.0);
  const ProfitRates rates = ComputeProfitRates(policy, params, s);
  s.government_profit = rates.government;
  s.manufacturer_profit = rates.manufacturer;
  s.retailer_profit = rates.retailer;
  return s;
}

}  // namespace vaxgame
