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

// Test-only reference values. Nothing here calls into the library: the
// closed-form limits are transcribed independently and the frozen numbers
// were produced by a separate script that solves the reduced 2x2 system
// directly (stationary point by elimination, eigenvalue by the quadratic
// formula) rather than through the library's formulas.

#ifndef VAXGAME_TESTS_SUPPORT_REFERENCE_H_
#define VAXGAME_TESTS_SUPPORT_REFERENCE_H_

#include <algorithm>
#include <cmath>

namespace vaxgame::testing {

inline double RelErr(double actual, double expected) {
  const double scale = std::max(std::abs(expected), 1e-300);
  return std::abs(actual - expected) / scale;
}

struct Limits {
  double quality;
  double goodwill;
  double lambda;
};

struct RawParams {
  double alpha, beta, theta1, theta2, theta3, gamma1, gamma2, eta, delta, r;
};

inline constexpr RawParams kBaseline{18, 7, 1, 0.5, 0.8, 0.3, 0.2, 7, 0.1, 0.03};

inline double DeltaOf(const RawParams& p) {
  return 2 * p.theta1 * p.theta1 * p.gamma1 * p.gamma1 +
         (2 * p.theta2 * p.theta2 + p.theta3 * p.theta3) * p.gamma2 * p.gamma2;
}

// Limits of state and costate, no subsidy.
inline Limits NoSubsidyLimits(const RawParams& p) {
  const double den = 8 * p.beta * p.delta * (p.r + p.delta) - DeltaOf(p);
  return {2 * p.gamma1 * p.theta1 * p.theta1 * p.alpha / den,
          p.gamma2 * (2 * p.theta2 * p.theta2 + p.theta3 * p.theta3) *
              p.alpha / den,
          p.alpha * p.delta / den};
}

// Limits under the technology-cost subsidy.
inline Limits ManufacturerQLimits(const RawParams& p) {
  const double g = p.gamma1 * p.gamma1 * p.theta1 * p.theta1;
  const double rd = p.r + p.delta;
  const double frac = (4 * p.alpha * p.delta * rd + p.eta * g) /
                      (4 * rd * (8 * p.beta * p.delta * rd + g - DeltaOf(p)));
  return {p.gamma1 * p.theta1 * p.theta1 / p.delta *
              (frac + p.eta / (4 * rd)),
          p.gamma2 * (2 * p.theta2 * p.theta2 + p.theta3 * p.theta3) /
              p.delta * frac,
          frac};
}

// Limits under the per-dose subsidy.
inline Limits ManufacturerDLimits(const RawParams& p) {
  const double den = 32 * p.beta * p.delta * (p.r + p.delta) - DeltaOf(p);
  const double lift = p.alpha + p.beta * p.eta;
  return {2 * p.gamma1 * p.theta1 * p.theta1 * lift / den,
          p.gamma2 * (2 * p.theta2 * p.theta2 + p.theta3 * p.theta3) * lift /
              den,
          lift * p.delta / den};
}

// Frozen baseline values from the independent script.
namespace frozen {

inline constexpr double kDelta = 0.2256;

namespace none {
inline constexpr double kLambdaInf = 3.5828025477707;
inline constexpr double kAggregateInf = 8.0828025477707;
inline constexpr double kRate = -0.0808980113006968;
inline constexpr double kLambda0 = 2.89841600997719;
inline constexpr double kTechInf = 2.14968152866242;
inline constexpr double kBlockInf = 0.71656050955414;
inline constexpr double kAdvInf = 0.573248407643312;
inline constexpr double kWholesaleInf = 1.86305732484076;
inline constexpr double kRetailInf = 2.79458598726115;
inline constexpr double kDemandInf = 6.52070063694267;
inline constexpr double kGovInf = 45.6449044585987;
inline constexpr double kManuInf = 9.58114426548744;
inline constexpr double kRetInf = 5.90991267394215;
inline constexpr double kManu0 = 4.10555121233586;
inline constexpr double kDemandTau = 4.51628112198385;  // t = 0.1
}  // namespace none

namespace manu_q {
inline constexpr double kLambdaInf = 5.08362333142887;
inline constexpr double kAggregateInf = 19.0087778528022;
inline constexpr double kRate = -0.0889402300775375;
inline constexpr double kLambda0 = 3.5332346178655;
inline constexpr double kTechInf = 5.5635485378902;
inline constexpr double kPhiInf = 0.451757456938804;
inline constexpr double kPhi0 = 0.58419749397567;
inline constexpr double kDemandInf = 9.25219446320054;
inline constexpr double kGovInf = 57.7737206215004;
inline constexpr double kManuInf = 15.4562691834789;
inline constexpr double kRetailInf = 3.96522619851452;
inline constexpr double kGovTau = 24.2061077644171;  // t = 0.1
}  // namespace manu_q

namespace manu_d {
inline constexpr double kLambdaInf = 2.49404407385348;
inline constexpr double kAggregateInf = 5.62656343061346;
inline constexpr double kRate = -0.0955344161013082;
inline constexpr double kLambda0 = 2.38267044326521;
inline constexpr double kTechInf = 1.49642644431209;
inline constexpr double kSubsidyInf = 1.81238832638475;
inline constexpr double kSubsidy0 = 2.21428571428571;
inline constexpr double kRetailInf = 2.07832042882668;
inline constexpr double kWholesaleInf = 0.781417510422871;
inline constexpr double kDemandInf = 9.07832042882668;
inline constexpr double kGovInf = 47.0948010334011;
inline constexpr double kManuInf = 22.3033493482358;
}  // namespace manu_d

}  // namespace frozen
}  // namespace vaxgame::testing

#endif  // VAXGAME_TESTS_SUPPORT_REFERENCE_H_
