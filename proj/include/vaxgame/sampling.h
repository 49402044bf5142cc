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

#ifndef VAXGAME_SAMPLING_H_
#define VAXGAME_SAMPLING_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "vaxgame/params.h"

namespace vaxgame {

// Perturbs every field of `base` by an independent log-uniform factor in
// [low, high]. Deterministic for a given seed.
class ParamSampler {
 public:
  explicit ParamSampler(ModelParams base, std::uint64_t seed = 20241019,
                        double low = 0.5, double high = 2.0);

  ModelParams Next();

 private:
  ModelParams base_;
  std::mt19937_64 engine_;
  double log_low_;
  double log_high_;
};

// True when every policy in `policies` passes validation and its saddle path
// stays in the interior regime.
bool IsFeasibleFor(const ModelParams& params,
                   std::span<const PolicyKind> policies);

// Draws until `count` parameter sets satisfy `accept`. Throws UsageError if
// more than `max_attempts` draws are needed.
std::vector<ModelParams> SampleFeasible(
    ParamSampler& sampler, std::size_t count,
    const std::function<bool(const ModelParams&)>& accept,
    std::size_t max_attempts = 100000);

}  // namespace vaxgame

#endif  // VAXGAME_SAMPLING_H_
