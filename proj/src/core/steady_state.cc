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

#include "vaxgame/steady_state.h"

#include <limits>

#include "vaxgame/feasibility.h"

namespace vaxgame {

ReducedSystem::Point ReducedSystem::StationaryPoint() const {
  // [ -delta        m     ] [A]      = [ -s_A         ]
  // [ -c        r + delta ] [lambda]   [  c * s_lambda ]
  const double a11 = -decay;
  const double a12 = costate_gain;
  const double a21 = -aggregate_gain;
  const double a22 = discount + decay;
  const double b1 = -aggregate_forcing;
  const double b2 = aggregate_gain * costate_forcing;
  const double det = a11 * a22 - a12 * a21;
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det};
}

ReducedSystem BuildReducedSystem(PolicyKind policy, const ModelParams& params) {
  RequireFeasible(params, policy);
  const double big_delta = ComputeDelta(params);
  const double tech = params.gamma1 * params.gamma1 * params.theta1 *
                      params.theta1;
  ReducedSystem sys;
  sys.decay = params.delta;
  sys.discount = params.r;
  switch (policy) {
    case PolicyKind::kNoSubsidy:
    case PolicyKind::kCustomerP:
      sys.costate_gain = big_delta;
      sys.aggregate_gain = 1.0 / (8.0 * params.beta);
      sys.aggregate_forcing = 0.0;
      sys.costate_forcing = params.alpha;
      break;
    case PolicyKind::kManufacturerQ:
      sys.costate_gain = big_delta - tech;
      sys.aggregate_gain = 1.0 / (8.0 * params.beta);
      sys.aggregate_forcing =
          tech * params.eta / (4.0 * (params.r + params.delta));
      sys.costate_forcing = params.alpha;
      break;
    case PolicyKind::kManufacturerD:
      sys.costate_gain = big_delta;
      sys.aggregate_gain = 1.0 / (32.0 * params.beta);
      sys.aggregate_forcing = 0.0;
      sys.costate_forcing = params.alpha + params.eta * params.beta;
      break;
  }
  return sys;
}

SteadyState ComputeSteadyState(PolicyKind policy, const ModelParams& params) {
  RequireFeasible(params, policy);
  const double alpha = params.alpha;
  const double beta = params.beta;
  const double eta = params.eta;
  const double delta = params.delta;
  const double rd = params.r + delta;
  const double big_delta = ComputeDelta(params);
  const double tech = params.gamma1 * params.gamma1 * params.theta1 *
                      params.theta1;
  const double goodwill_mix = 2.0 * params.theta2 * params.theta2 +
                              params.theta3 * params.theta3;

  double quality = 0.0;
  double goodwill = 0.0;
  double lambda = 0.0;
  switch (policy) {
    case PolicyKind::kNoSubsidy:
    case PolicyKind::kCustomerP: {
      const double denom = 8.0 * beta * delta * rd - big_delta;
      quality = 2.0 * params.gamma1 * params.theta1 * params.theta1 * alpha /
                denom;
      goodwill = params.gamma2 * goodwill_mix * alpha / denom;
      lambda = alpha * delta / denom;
      break;
    }
    case PolicyKind::kManufacturerQ: {
      const double shadow =
          (4.0 * alpha * delta * rd + eta * tech) /
          (4.0 * rd * (8.0 * beta * delta * rd + tech - big_delta));
      quality = params.gamma1 * params.theta1 * params.theta1 / delta *
                (shadow + eta / (4.0 * rd));
      goodwill = params.gamma2 * goodwill_mix / delta * shadow;
      lambda = shadow;
      break;
    }
    case PolicyKind::kManufacturerD: {
      const double denom = 32.0 * beta * delta * rd - big_delta;
      quality = 2.0 * params.gamma1 * params.theta1 * params.theta1 *
                (alpha + beta * eta) / denom;
      goodwill = params.gamma2 * goodwill_mix * (alpha + beta * eta) / denom;
      lambda = (alpha + beta * eta) * delta / denom;
      break;
    }
  }
  const double aggregate = params.gamma1 * quality + params.gamma2 * goodwill;
  return {BuildSnapshot(policy, params, std::numeric_limits<double>::infinity(),
                        quality, goodwill, aggregate, lambda)};
}

}  // namespace vaxgame
