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

#ifndef VAXGAME_STEADY_STATE_H_
#define VAXGAME_STEADY_STATE_H_

#include "vaxgame/equilibrium.h"
#include "vaxgame/params.h"

namespace vaxgame {

// Linear dynamics of the aggregate A = gamma1*Q + gamma2*G and the retailer
// costate lambda once the interior effort closures (with mu = 2*lambda) are
// substituted:
//
//   A'      = m * lambda - delta * A + s_A
//   lambda' = (r + delta) * lambda - c * (A + s_lambda)
//
// The coefficients are the unique linear ones that reproduce the closed-form
// steady-state limits together with the effort closures.
struct ReducedSystem {
  double costate_gain = 0.0;       // m
  double aggregate_gain = 0.0;     // c
  double aggregate_forcing = 0.0;  // s_A
  double costate_forcing = 0.0;    // s_lambda
  double decay = 0.0;              // delta
  double discount = 0.0;           // r

  struct Point {
    double aggregate = 0.0;
    double lambda = 0.0;
  };

  double AggregateRate(double aggregate, double lambda) const {
    return costate_gain * lambda - decay * aggregate + aggregate_forcing;
  }
  double CostateRate(double aggregate, double lambda) const {
    return (discount + decay) * lambda -
           aggregate_gain * (aggregate + costate_forcing);
  }

  // Root of (AggregateRate, CostateRate) = (0, 0) by direct 2x2 solve.
  Point StationaryPoint() const;
};

// Throws InfeasibleError unless the policy's stability and interior
// conditions hold. Customer-p shares the no-subsidy system.
ReducedSystem BuildReducedSystem(PolicyKind policy, const ModelParams& params);

struct SteadyState {
  Snapshot limit;  // every field at t -> infinity (limit.t is +inf)
};

// Q, G and lambda come straight from the closed-form limits; mu = 2*lambda
// and everything else from the equilibrium closures. Customer-p is reported
// at the government's optimal psi = 0.
SteadyState ComputeSteadyState(PolicyKind policy, const ModelParams& params);

}  // namespace vaxgame

#endif  // VAXGAME_STEADY_STATE_H_
