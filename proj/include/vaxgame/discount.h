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

#ifndef VAXGAME_DISCOUNT_H_
#define VAXGAME_DISCOUNT_H_

#include <optional>
#include <span>

#include "vaxgame/trajectory.h"

namespace vaxgame {

struct DiscountOptions {
  // Required bound on exp(-r * horizon). 1 accepts any horizon.
  double tail_tolerance = 1.0;
  // Rate assumed beyond the horizon; defaults to the last sample.
  std::optional<double> steady_rate;
};

// Integral of exp(-r t) * rate(t) over [0, inf): composite Simpson on the
// uniform grid (3/8 rule on the last three panels for an odd panel count)
// plus the closed-form tail steady_rate * exp(-r T) / r.
//
// Throws UsageError for an empty or non-uniform series and when
// exp(-r * horizon) exceeds options.tail_tolerance.
double DiscountedValue(std::span<const double> times,
                       std::span<const double> rates, double r,
                       const DiscountOptions& options = {});

enum class Party { kGovernment, kManufacturer, kRetailer };

// Convenience wrapper reading one profit column off a time series.
double DiscountedProfit(const TimeSeries& series, Party party, double r,
                        const DiscountOptions& options = {});

}  // namespace vaxgame

#endif  // VAXGAME_DISCOUNT_H_
