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

#include <cmath>

#include "doctest.h"
#include "support/reference.h"
#include "vaxgame/errors.h"
#include "vaxgame/feasibility.h"
#include "vaxgame/sampling.h"

namespace vaxgame {
namespace {

namespace fz = testing::frozen;
using testing::RelErr;

testing::RawParams Raw(const ModelParams& p) {
  return {p.alpha, p.beta,   p.theta1, p.theta2, p.theta3,
          p.gamma1, p.gamma2, p.eta,    p.delta,  p.r};
}

testing::Limits Expected(PolicyKind policy, const ModelParams& p) {
  switch (policy) {
    case PolicyKind::kManufacturerQ:
      return testing::ManufacturerQLimits(Raw(p));
    case PolicyKind::kManufacturerD:
      return testing::ManufacturerDLimits(Raw(p));
    default:
      return testing::NoSubsidyLimits(Raw(p));
  }
}

void CheckLimits(PolicyKind policy, const ModelParams& p, double tol) {
  const testing::Limits want = Expected(policy, p);
  const Snapshot s = ComputeSteadyState(policy, p).limit;
  CHECK(RelErr(s.quality, want.quality) < tol);
  CHECK(RelErr(s.goodwill, want.goodwill) < tol);
  CHECK(RelErr(s.lambda, want.lambda) < tol);
  CHECK(s.mu == 2.0 * s.lambda);
  CHECK(std::isinf(s.t));

  // Second route: the stationary point of the reduced system.
  const ReducedSystem::Point fixed = BuildReducedSystem(policy, p).StationaryPoint();
  CHECK(RelErr(fixed.lambda, want.lambda) < 1e-10);
  CHECK(RelErr(fixed.aggregate,
               p.gamma1 * want.quality + p.gamma2 * want.goodwill) < 1e-10);

  // Closure round trip: Q = theta1 q / delta, G = (theta2 b + theta3 a) / delta.
  CHECK(RelErr(p.theta1 * s.technology / p.delta, s.quality) < 1e-10);
  CHECK(RelErr((p.theta2 * s.blockchain + p.theta3 * s.advertising) / p.delta,
               s.goodwill) < 1e-10);
  CHECK(RelErr(p.gamma1 * s.quality + p.gamma2 * s.goodwill, s.aggregate) <
        1e-12);
}

TEST_CASE("closed-form limits at baseline") {
  for (PolicyKind policy : kAllPolicies) {
    CAPTURE(PolicyName(policy));
    CheckLimits(policy, BaselineParams(), 1e-12);
  }
}

TEST_CASE("frozen baseline steady values") {
  const ModelParams p = BaselineParams();
  const Snapshot none = ComputeSteadyState(PolicyKind::kNoSubsidy, p).limit;
  CHECK(RelErr(none.lambda, fz::none::kLambdaInf) < 1e-12);
  CHECK(RelErr(none.aggregate, fz::none::kAggregateInf) < 1e-12);
  CHECK(RelErr(none.demand, fz::none::kDemandInf) < 1e-12);
  CHECK(RelErr(none.government_profit, fz::none::kGovInf) < 1e-12);
  CHECK(RelErr(none.manufacturer_profit, fz::none::kManuInf) < 1e-12);
  CHECK(RelErr(none.retailer_profit, fz::none::kRetInf) < 1e-12);

  const Snapshot t = ComputeSteadyState(PolicyKind::kManufacturerQ, p).limit;
  CHECK(RelErr(t.lambda, fz::manu_q::kLambdaInf) < 1e-12);
  CHECK(RelErr(t.aggregate, fz::manu_q::kAggregateInf) < 1e-12);
  CHECK(RelErr(t.technology, fz::manu_q::kTechInf) < 1e-12);
  CHECK(RelErr(t.subsidy, fz::manu_q::kPhiInf) < 1e-12);
  CHECK(RelErr(t.government_profit, fz::manu_q::kGovInf) < 1e-12);
  CHECK(RelErr(t.manufacturer_profit, fz::manu_q::kManuInf) < 1e-12);
  CHECK(RelErr(t.retail_price, fz::manu_q::kRetailInf) < 1e-12);

  const Snapshot s = ComputeSteadyState(PolicyKind::kManufacturerD, p).limit;
  CHECK(RelErr(s.lambda, fz::manu_d::kLambdaInf) < 1e-12);
  CHECK(RelErr(s.aggregate, fz::manu_d::kAggregateInf) < 1e-12);
  CHECK(RelErr(s.technology, fz::manu_d::kTechInf) < 1e-12);
  CHECK(RelErr(s.subsidy, fz::manu_d::kSubsidyInf) < 1e-12);
  CHECK(RelErr(s.retail_price, fz::manu_d::kRetailInf) < 1e-12);
  CHECK(RelErr(s.wholesale_price, fz::manu_d::kWholesaleInf) < 1e-12);
  CHECK(RelErr(s.demand, fz::manu_d::kDemandInf) < 1e-12);
  CHECK(RelErr(s.government_profit, fz::manu_d::kGovInf) < 1e-12);
  CHECK(RelErr(s.manufacturer_profit, fz::manu_d::kManuInf) < 1e-12);
}

TEST_CASE("customer-p limit equals the no-subsidy limit") {
  const ModelParams p = BaselineParams();
  Snapshot a = ComputeSteadyState(PolicyKind::kNoSubsidy, p).limit;
  Snapshot b = ComputeSteadyState(PolicyKind::kCustomerP, p).limit;
  b.policy = a.policy;
  CHECK(a == b);
}

TEST_CASE("closed-form limits on random feasible draws") {
  ParamSampler sampler(BaselineParams(), 7);
  const auto draws = SampleFeasible(sampler, 100, [](const ModelParams& p) {
    return IsFeasibleFor(p, kDynamicPolicies);
  });
  for (const ModelParams& p : draws) {
    for (PolicyKind policy : kAllPolicies) CheckLimits(policy, p, 1e-12);
  }
}

TEST_CASE("infeasible parameters are refused") {
  ModelParams p = BaselineParams();
  p.beta = 0.1;
  CHECK_THROWS_AS(ComputeSteadyState(PolicyKind::kNoSubsidy, p),
                  InfeasibleError);
  CHECK_THROWS_AS(BuildReducedSystem(PolicyKind::kNoSubsidy, p),
                  InfeasibleError);
}

}  // namespace
}  // namespace vaxgame
