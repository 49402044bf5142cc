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

#ifndef VAXGAME_SADDLE_PATH_H_
#define VAXGAME_SADDLE_PATH_H_

#include <cmath>

#include "vaxgame/params.h"

namespace vaxgame {

// The bounded solution of the reduced state-costate system starting from
// A(0) = 0. Both A and lambda have the form Lambda*exp(k t) + B.
struct SaddlePath {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  double rate = 0.0;             // k, the stable eigenvalue (< 0)
  double unstable_rate = 0.0;    // the discarded root, r - k
  double aggregate_limit = 0.0;  // A(inf)
  double costate_limit = 0.0;    // lambda(inf)
  double aggregate_coeff = 0.0;  // Lambda_A = -A(inf)
  double costate_coeff = 0.0;    // Lambda_lambda
  double quality_limit = 0.0;    // Q(inf)
  double goodwill_limit = 0.0;   // G(inf)

  double AggregateAt(double t) const {
    return aggregate_limit + aggregate_coeff * std::exp(rate * t);
  }
  double CostateAt(double t) const {
    return costate_limit + costate_coeff * std::exp(rate * t);
  }
};

// k = [r - sqrt(r^2 + 4 delta (r+delta) - 4 m c)] / 2 for the policy's reduced
// system; the costate coefficient follows from the stable eigenvector,
// Lambda_lambda = c Lambda_A / (r + delta - k), which equals
// (k + delta) Lambda_A / m whenever m != 0.
//
// Throws InfeasibleError when the eigenvalues are not real or k >= 0, and
// RegimeError when lambda(0) < 0 or a subsidy clamp binds at either end of
// the path (the controls are monotone in t, so the endpoints bound them).
SaddlePath ComputeSaddlePath(PolicyKind policy, const ModelParams& params);

}  // namespace vaxgame

#endif  // VAXGAME_SADDLE_PATH_H_
