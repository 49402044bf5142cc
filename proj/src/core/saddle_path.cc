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

#include "vaxgame/saddle_path.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "vaxgame/equilibrium.h"
#include "vaxgame/errors.h"
#include "vaxgame/steady_state.h"

namespace vaxgame {

SaddlePath ComputeSaddlePath(PolicyKind policy, const ModelParams& params) {
  const ReducedSystem sys = BuildReducedSystem(policy, params);
  const double r = params.r;
  const double rd = r + params.delta;
  const double discriminant = r * r + 4.0 * params.delta * rd -
                              4.0 * sys.costate_gain * sys.aggregate_gain;
  if (!(discriminant > 0.0)) {
    throw InfeasibleError(
        "state-costate system has no real saddle: discriminant " +
        std::to_string(discriminant));
  }
  const double root = std::sqrt(discriminant);

  SaddlePath path;
  path.policy = policy;
  path.rate = 0.5 * (r - root);
  path.unstable_rate = 0.5 * (r + root);
  if (!(path.rate < 0.0)) {
    throw InfeasibleError("stable eigenvalue is not negative");
  }

  const Snapshot limit = ComputeSteadyState(policy, params).limit;
  path.aggregate_limit = limit.aggregate;
  path.costate_limit = limit.lambda;
  path.quality_limit = limit.quality;
  path.goodwill_limit = limit.goodwill;
  path.aggregate_coeff = -path.aggregate_limit;
  path.costate_coeff =
      sys.aggregate_gain * path.aggregate_coeff / (rd - path.rate);

  const double initial_costate = path.CostateAt(0.0);
  if (initial_costate < 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "initial costate lambda(0)=%.6g is negative; efforts would "
                  "be negative",
                  initial_costate);
    throw RegimeError(buf);
  }
  // Throws RegimeError if the subsidy clamp binds at t = 0.
  BuildSnapshot(policy, params, 0.0, 0.0, 0.0, 0.0, initial_costate);
  return path;
}

}  // namespace vaxgame
