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

#include "vaxgame/sampling.h"

#include <cmath>

#include "vaxgame/errors.h"
#include "vaxgame/saddle_path.h"

namespace vaxgame {

ParamSampler::ParamSampler(ModelParams base, std::uint64_t seed, double low,
                           double high)
    : base_(base),
      engine_(seed),
      log_low_(std::log(low)),
      log_high_(std::log(high)) {}

ModelParams ParamSampler::Next() {
  ModelParams out = base_;
  for (std::string_view name : kParamNames) {
    // 53 random bits mapped to [0, 1); avoids the implementation-defined
    // std::uniform_real_distribution so draws match across standard libraries.
    const double u =
        static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double factor = std::exp(log_low_ + (log_high_ - log_low_) * u);
    ParamRef(out, name) *= factor;
  }
  return out;
}

bool IsFeasibleFor(const ModelParams& params,
                   std::span<const PolicyKind> policies) {
  try {
    for (PolicyKind policy : policies) ComputeSaddlePath(policy, params);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<ModelParams> SampleFeasible(
    ParamSampler& sampler, std::size_t count,
    const std::function<bool(const ModelParams&)>& accept,
    std::size_t max_attempts) {
  std::vector<ModelParams> out;
  out.reserve(count);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > max_attempts) {
      throw UsageError("could not find enough feasible parameter draws");
    }
    ModelParams candidate = sampler.Next();
    if (accept(candidate)) out.push_back(candidate);
  }
  return out;
}

}  // namespace vaxgame
