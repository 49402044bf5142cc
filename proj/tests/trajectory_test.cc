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

#include "vaxgame/trajectory.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "support/reference.h"
#include "vaxgame/errors.h"
#include "vaxgame/sampling.h"
#include "vaxgame/steady_state.h"

namespace vaxgame {
namespace {

namespace fz = testing::frozen;
using testing::RelErr;

TEST_CASE("grid construction") {
  const std::vector<double> grid = UniformGrid(10.0, 11);
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 10.0);
  CHECK(grid[3] == doctest::Approx(3.0));
  CHECK_THROWS_AS(UniformGrid(10.0, 1), UsageError);
  CHECK_THROWS_AS(UniformGrid(-1.0, 5), UsageError);
  const std::vector<double> bad{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(CheckGrid(bad), UsageError);
  const std::vector<double> late{0.5, 1.0};
  CHECK_THROWS_AS(CheckGrid(late), UsageError);
}

TEST_CASE("eigenvalues and initial costates at baseline") {
  const ModelParams p = BaselineParams();
  const SaddlePath none = ComputeSaddlePath(PolicyKind::kNoSubsidy, p);
  CHECK(RelErr(none.rate, fz::none::kRate) < 1e-12);
  CHECK(RelErr(none.CostateAt(0.0), fz::none::kLambda0) < 1e-12);
  CHECK(none.AggregateAt(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(none.unstable_rate == doctest::Approx(p.r - none.rate));

  const SaddlePath t = ComputeSaddlePath(PolicyKind::kManufacturerQ, p);
  CHECK(RelErr(t.rate, fz::manu_q::kRate) < 1e-12);
  CHECK(RelErr(t.CostateAt(0.0), fz::manu_q::kLambda0) < 1e-12);

  const SaddlePath s = ComputeSaddlePath(PolicyKind::kManufacturerD, p);
  CHECK(RelErr(s.rate, fz::manu_d::kRate) < 1e-12);
  CHECK(RelErr(s.CostateAt(0.0), fz::manu_d::kLambda0) < 1e-12);
}

TEST_CASE("saddle path satisfies the reduced dynamics") {
  const ModelParams p = BaselineParams();
  for (PolicyKind policy : kDynamicPolicies) {
    const ReducedSystem sys = BuildReducedSystem(policy, p);
    const SaddlePath path = ComputeSaddlePath(policy, p);
    for (double t : {0.0, 1.0, 7.5, 40.0}) {
      const double e = std::exp(path.rate * t);
      const double da = path.rate * path.aggregate_coeff * e;
      const double dl = path.rate * path.costate_coeff * e;
      CHECK(std::abs(da - sys.AggregateRate(path.AggregateAt(t),
                                            path.CostateAt(t))) < 1e-12);
      CHECK(std::abs(dl - sys.CostateRate(path.AggregateAt(t),
                                          path.CostateAt(t))) < 1e-12);
    }
  }
}

TEST_CASE("frozen values along baseline paths") {
  const ModelParams p = BaselineParams();
  const TrajectoryModel none(PolicyKind::kNoSubsidy, p);
  CHECK(RelErr(none.At(0.0).manufacturer_profit, fz::none::kManu0) < 1e-12);
  CHECK(RelErr(none.At(0.1).demand, fz::none::kDemandTau) < 1e-12);

  const TrajectoryModel t(PolicyKind::kManufacturerQ, p);
  CHECK(RelErr(t.At(0.0).subsidy, fz::manu_q::kPhi0) < 1e-12);
  CHECK(RelErr(t.At(0.1).government_profit, fz::manu_q::kGovTau) < 1e-12);

  const TrajectoryModel s(PolicyKind::kManufacturerD, p);
  CHECK(RelErr(s.At(0.0).subsidy, fz::manu_d::kSubsidy0) < 1e-12);
}

TEST_CASE("states start at zero and approach the steady state") {
  const ModelParams p = BaselineParams();
  for (PolicyKind policy : kAllPolicies) {
    const TrajectoryModel model(policy, p);
    const Snapshot start = model.At(0.0);
    CHECK(start.quality == 0.0);
    CHECK(start.goodwill == 0.0);
    const Snapshot late = model.At(600.0);
    const Snapshot limit = ComputeSteadyState(policy, p).limit;
    CHECK(RelErr(late.quality, limit.quality) < 1e-12);
    CHECK(RelErr(late.goodwill, limit.goodwill) < 1e-12);
    CHECK(RelErr(late.lambda, limit.lambda) < 1e-12);
    CHECK(RelErr(late.government_profit, limit.government_profit) < 1e-12);
  }
}

TEST_CASE("state ODEs hold along the path") {
  // Central differences of Q and G against the right-hand sides.
  const ModelParams p = BaselineParams();
  const double h = 1e-4;
  for (PolicyKind policy : kDynamicPolicies) {
    const TrajectoryModel model(policy, p);
    for (double t : {0.5, 3.0, 20.0}) {
      const Snapshot s = model.At(t);
      const double dq = (model.At(t + h).quality - model.At(t - h).quality) /
                        (2 * h);
      const double dg = (model.At(t + h).goodwill - model.At(t - h).goodwill) /
                        (2 * h);
      CHECK(dq == doctest::Approx(p.theta1 * s.technology -
                                  p.delta * s.quality).epsilon(1e-7));
      CHECK(dg == doctest::Approx(p.theta2 * s.blockchain +
                                  p.theta3 * s.advertising -
                                  p.delta * s.goodwill).epsilon(1e-7));
    }
  }
}

TEST_CASE("resonant decay rate keeps Q(0) = 0") {
  // With every effort channel switched off m = 0 and the stable root is
  // exactly -delta, where the Q/G kernel degenerates to t e^{-delta t}.
  ModelParams p = BaselineParams();
  const double target = -p.delta;
  p.theta1 = p.theta2 = p.theta3 = 0.0;
  const TrajectoryModel model(PolicyKind::kNoSubsidy, p);
  CHECK(model.path().rate == doctest::Approx(target));
  CHECK(model.At(0.0).quality == 0.0);
  CHECK(std::isfinite(model.At(5.0).quality));
}

bool Nondecreasing(const TimeSeries& s, double Snapshot::*field) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double prev = s[i - 1].*field;
    if (s[i].*field < prev - 1e-12 * std::max(1.0, std::abs(prev))) {
      return false;
    }
  }
  return true;
}

bool Nonincreasing(const TimeSeries& s, double Snapshot::*field) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double prev = s[i - 1].*field;
    if (s[i].*field > prev + 1e-12 * std::max(1.0, std::abs(prev))) {
      return false;
    }
  }
  return true;
}

void CheckMonotone(const ModelParams& p, const std::vector<double>& grid) {
  for (PolicyKind policy : kDynamicPolicies) {
    CAPTURE(PolicyName(policy));
    const TimeSeries s = Trajectory(policy, p, grid);
    for (auto field : {&Snapshot::technology, &Snapshot::blockchain,
                       &Snapshot::advertising, &Snapshot::quality,
                       &Snapshot::goodwill, &Snapshot::retail_price,
                       &Snapshot::wholesale_price, &Snapshot::demand}) {
      CHECK(Nondecreasing(s, field));
    }
    if (policy != PolicyKind::kNoSubsidy) {
      CHECK(Nonincreasing(s, &Snapshot::subsidy));
    }
    // gamma1 Q + gamma2 G is the saddle-path aggregate.
    for (const Snapshot& x : s) {
      const double a = p.gamma1 * x.quality + p.gamma2 * x.goodwill;
      CHECK(std::abs(a - x.aggregate) <= 1e-8 * std::max(1e-300, x.aggregate));
    }
  }
}

TEST_CASE("paths are monotone at baseline") {
  CheckMonotone(BaselineParams(), UniformGrid(200.0, 2001));
}

TEST_CASE("paths are monotone on random feasible draws") {
  ParamSampler sampler(BaselineParams(), 11);
  const auto draws = SampleFeasible(sampler, 100, [](const ModelParams& p) {
    return IsFeasibleFor(p, kDynamicPolicies);
  });
  const std::vector<double> grid = UniformGrid(200.0, 401);
  for (const ModelParams& p : draws) CheckMonotone(p, grid);
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  const ModelParams p = BaselineParams();
  const std::vector<double> grid = UniformGrid(100.0, 5001);
  for (PolicyKind policy : kAllPolicies) {
    const TimeSeries par = Trajectory(policy, p, grid, Execution::kParallel);
    const TimeSeries ser = Trajectory(policy, p, grid, Execution::kSerial);
    CHECK(par == ser);
  }
}

TEST_CASE("customer-p reimbursement leaves quantities unchanged") {
  const ModelParams p = BaselineParams();
  const std::vector<double> grid = UniformGrid(50.0, 101);
  const TimeSeries base = Trajectory(PolicyKind::kNoSubsidy, p, grid);
  std::vector<double> psi(grid.size());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = 0.6 * std::exp(-grid[i]);
  const TimeSeries resp = CustomerPResponse(p, psi, base);
  REQUIRE(resp.size() == base.size());
  for (std::size_t i = 0; i < resp.size(); ++i) {
    CHECK(resp[i].policy == PolicyKind::kCustomerP);
    CHECK(resp[i].quality == base[i].quality);
    CHECK(resp[i].technology == base[i].technology);
    CHECK(RelErr(resp[i].demand, base[i].demand) < 1e-12);
    CHECK(RelErr(resp[i].retail_price * (1 - psi[i]), base[i].retail_price) <
          1e-12);
    // The government pays psi p D on top of the no-subsidy rate.
    CHECK(resp[i].government_profit <= base[i].government_profit + 1e-12);
  }
  const std::vector<double> bad(grid.size(), 1.0);
  CHECK_THROWS_AS(CustomerPResponse(p, bad, base), UsageError);
  const std::vector<double> short_psi(3, 0.1);
  CHECK_THROWS_AS(CustomerPResponse(p, short_psi, base), UsageError);
}

TEST_CASE("infeasible or boundary parameters are refused") {
  ModelParams p = BaselineParams();
  p.beta = 0.1;
  CHECK_THROWS_AS(TrajectoryModel(PolicyKind::kNoSubsidy, p), InfeasibleError);
  p = BaselineParams();
  p.eta = 1.0;
  CHECK_THROWS_AS(TrajectoryModel(PolicyKind::kManufacturerQ, p),
                  InfeasibleError);
}

}  // namespace
}  // namespace vaxgame
