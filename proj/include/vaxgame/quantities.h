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

#ifndef VAXGAME_QUANTITIES_H_
#define VAXGAME_QUANTITIES_H_

#include <array>
#include <string_view>

#include "vaxgame/equilibrium.h"

namespace vaxgame {

// Named view of one Snapshot field; the names double as CSV column headers.
struct Quantity {
  std::string_view name;
  double Snapshot::*field;

  double operator()(const Snapshot& s) const { return s.*field; }
};

inline constexpr Quantity kQuality{"Q", &Snapshot::quality};
inline constexpr Quantity kGoodwill{"G", &Snapshot::goodwill};
inline constexpr Quantity kAggregate{"A", &Snapshot::aggregate};
inline constexpr Quantity kLambda{"lambda", &Snapshot::lambda};
inline constexpr Quantity kMu{"mu", &Snapshot::mu};
inline constexpr Quantity kTechnology{"q", &Snapshot::technology};
inline constexpr Quantity kBlockchain{"b", &Snapshot::blockchain};
inline constexpr Quantity kAdvertising{"a", &Snapshot::advertising};
inline constexpr Quantity kWholesale{"omega", &Snapshot::wholesale_price};
inline constexpr Quantity kRetail{"p", &Snapshot::retail_price};
inline constexpr Quantity kSubsidy{"subsidy", &Snapshot::subsidy};
inline constexpr Quantity kDemand{"D", &Snapshot::demand};
inline constexpr Quantity kGovernmentProfit{"pi_G", &Snapshot::government_profit};
inline constexpr Quantity kManufacturerProfit{"pi_M",
                                              &Snapshot::manufacturer_profit};
inline constexpr Quantity kRetailerProfit{"pi_R", &Snapshot::retailer_profit};

// Trajectory CSV column order (after t).
inline constexpr std::array<Quantity, 15> kSnapshotColumns = {
    kQuality,    kGoodwill,   kAggregate,       kLambda,
    kMu,         kTechnology, kBlockchain,      kAdvertising,
    kWholesale,  kRetail,     kSubsidy,         kDemand,
    kGovernmentProfit, kManufacturerProfit, kRetailerProfit};

}  // namespace vaxgame

#endif  // VAXGAME_QUANTITIES_H_
