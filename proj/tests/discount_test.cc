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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "support/reference.h"
#include "vaxgame/errors.h"
#include "vaxgame/steady_state.h"

namespace vaxgame {
namespace {

using testing::RelErr;

std::vector<double> Sample(const std::vector<double>& t, double (*f)(double)) {
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
  return out;
}

TEST_CASE("constant rate integrates to rate / r") {
  // The quadrature error shrinks like h^2 for one panel and h^4 otherwise.
  struct Case {
    std::size_t points;
    double tol;
  };
  for (Case c : {Case{2, 1e-2}, Case{3, 1e-5}, Case{4, 1e-5}, Case{101, 1e-11},
                 Case{102, 1e-11}}) {
    CAPTURE(c.points);
    const std::vector<double> t = UniformGrid(10.0, c.points);
    const std::vector<double> rates(c.points, 4.0);
    CHECK(RelErr(DiscountedValue(t, rates, 0.05), 80.0) < c.tol);
  }
}

TEST_CASE("smooth rates with even and odd panel counts") {
  // Integral of e^{-r t} (1 - e^{-t}) over [0, inf) is 1/r - 1/(r + 1).
  const double r = 0.2;
  const double want = 1.0 / r - 1.0 / (r + 1.0);
  for (std::size_t points : {2001u, 2002u}) {
    const std::vector<double> t = UniformGrid(200.0, points);
    const auto rates = Sample(t, [](double x) { return 1.0 - std::exp(-x); });
    CHECK(RelErr(DiscountedValue(t, rates, r), want) < 1e-6);
  }
}

TEST_CASE("explicit steady rate replaces the last sample in the tail") {
  const std::vector<double> t = UniformGrid(10.0, 11);
  const std::vector<double> rates(11, 1.0);
  DiscountOptions opts;
  opts.steady_rate = 3.0;
  const double r = 0.1;
  const double head = (1.0 - std::exp(-1.0)) / r;
  const double tail = 3.0 * std::exp(-1.0) / r;
  CHECK(DiscountedValue(t, rates, r, opts) ==
        doctest::Approx(head + tail).epsilon(1e-6));
}

TEST_CASE("tail tolerance") {
  const std::vector<double> t = UniformGrid(10.0, 11);
  const std::vector<double> rates(11, 1.0);
  DiscountOptions opts;
  opts.tail_tolerance = 1e-3;
  CHECK_THROWS_AS(DiscountedValue(t, rates, 0.03, opts), UsageError);
  CHECK_NOTHROW(DiscountedValue(t, rates, 1.0, opts));
}

TEST_CASE("malformed input") {
  const std::vector<double> empty;
  CHECK_THROWS_AS(DiscountedValue(empty, empty, 0.1), UsageError);
  const std::vector<double> t{0.0, 1.0, 3.0};
  const std::vector<double> rates{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(DiscountedValue(t, rates, 0.1), UsageError);
  const std::vector<double> u{0.0, 1.0, 2.0};
  CHECK_THROWS_AS(DiscountedValue(u, rates, 0.0), UsageError);
  const std::vector<double> two{1.0, 1.0};
  CHECK_THROWS_AS(DiscountedValue(u, two, 0.1), UsageError);
}

TEST_CASE("discounted profits converge with the horizon") {
  const ModelParams p = BaselineParams();
  for (PolicyKind policy : kDynamicPolicies) {
    const TimeSeries near = Trajectory(policy, p, UniformGrid(300.0, 3001));
    const TimeSeries far = Trajectory(policy, p, UniformGrid(600.0, 6001));
    for (Party party :
         {Party::kGovernment, Party::kManufacturer, Party::kRetailer}) {
      const double a = DiscountedProfit(near, party, p.r);
      const double b = DiscountedProfit(far, party, p.r);
      CHECK(RelErr(a, b) < 1e-6);
    }
  }
}

TEST_CASE("discounted profit of a settled path") {
  // Beyond every transient the value is the steady rate over r.
  const ModelParams p = BaselineParams();
  const Snapshot limit = ComputeSteadyState(PolicyKind::kNoSubsidy, p).limit;
  std::vector<double> t = UniformGrid(10.0, 11);
  TimeSeries flat(t.size(), limit);
  for (std::size_t i = 0; i < t.size(); ++i) flat[i].t = t[i];
  CHECK(RelErr(DiscountedProfit(flat, Party::kGovernment, p.r),
               limit.government_profit / p.r) < 1e-8);
}

}  // namespace
}  // namespace vaxgame
