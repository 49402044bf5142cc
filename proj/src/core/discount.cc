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

#include "vaxgame/discount.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vaxgame/errors.h"

namespace vaxgame {

double DiscountedValue(std::span<const double> times,
                       std::span<const double> rates, double r,
                       const DiscountOptions& options) {
  if (times.empty() || rates.empty()) {
    throw UsageError("cannot discount an empty series");
  }
  if (times.size() != rates.size()) {
    throw UsageError("time and rate series differ in length");
  }
  if (!(r > 0.0)) throw UsageError("discount rate must be positive");

  const double horizon = times.back();
  const double tail_weight = std::exp(-r * (horizon - times.front()));
  if (tail_weight > options.tail_tolerance) {
    throw UsageError("horizon too short: exp(-r*T) exceeds tail tolerance");
  }
  const double steady = options.steady_rate.value_or(rates.back());
  const double tail = steady * std::exp(-r * horizon) / r;

  const std::size_t panels = times.size() - 1;
  if (panels == 0) return tail;
  const double h = (horizon - times.front()) / static_cast<double>(panels);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw UsageError("discounting needs a uniform grid");
    }
  }

  std::vector<double> f(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    f[i] = std::exp(-r * times[i]) * rates[i];
  }
  if (panels == 1) return 0.5 * h * (f[0] + f[1]) + tail;

  double integral = 0.0;
  std::size_t simpson_panels = panels;
  if (panels % 2 == 1) {
    // Simpson 3/8 on the last three panels.
    const std::size_t j = panels - 3;
    integral +=
        3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
    simpson_panels = panels - 3;
  }
  if (simpson_panels > 0) {
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < simpson_panels; ++i) {
      (i % 2 == 1 ? odd : even) += f[i];
    }
    integral += h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[simpson_panels]);
  }
  return integral + tail;
}

double DiscountedProfit(const TimeSeries& series, Party party, double r,
                        const DiscountOptions& options) {
  std::vector<double> times;
  std::vector<double> rates;
  times.reserve(series.size());
  rates.reserve(series.size());
  for (const Snapshot& s : series) {
    times.push_back(s.t);
    switch (party) {
      case Party::kGovernment:
        rates.push_back(s.government_profit);
        break;
      case Party::kManufacturer:
        rates.push_back(s.manufacturer_profit);
        break;
      case Party::kRetailer:
        rates.push_back(s.retailer_profit);
        break;
    }
  }
  return DiscountedValue(times, rates, r, options);
}

}  // namespace vaxgame
