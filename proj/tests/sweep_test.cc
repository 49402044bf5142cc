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

#include "vaxgame/analysis/sweep.h"

#include <array>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "vaxgame/errors.h"

namespace vaxgame {
namespace {

std::vector<double> Linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

TEST_CASE("direction classification") {
  const std::vector<double> up{1, 2, 3}, down{3, 2, 1}, flat{1, 1}, mix{1, 3, 2},
      one{1};
  CHECK(Classify(up) == Direction::kIncreasing);
  CHECK(Classify(down) == Direction::kDecreasing);
  CHECK(Classify(flat) == Direction::kConstant);
  CHECK(Classify(mix) == Direction::kMixed);
  CHECK(Classify(one) == Direction::kUndetermined);
}

TEST_CASE("eta sweep directions") {
  const std::vector<double> grid = Linspace(4.0, 10.0, 13);
  const SweepResult r =
      RunSweep(BaselineParams(), "eta", grid, kDynamicPolicies);
  CHECK(r.Diagnostics().empty());
  for (std::string_view q : {"Q", "G", "D", "pi_G", "pi_M", "p", "omega",
                             "subsidy"}) {
    CAPTURE(q);
    CHECK(r.VerdictFor(PolicyKind::kManufacturerQ, q) == Direction::kIncreasing);
  }
  for (std::string_view q : {"Q", "G", "D", "pi_G", "pi_M", "subsidy"}) {
    CAPTURE(q);
    CHECK(r.VerdictFor(PolicyKind::kManufacturerD, q) == Direction::kIncreasing);
  }
  CHECK(r.PriceConditionEverywhere());
  CHECK(r.VerdictFor(PolicyKind::kManufacturerD, "p") == Direction::kDecreasing);
  CHECK(r.VerdictFor(PolicyKind::kManufacturerD, "omega") ==
        Direction::kDecreasing);
  // eta does not enter the no-subsidy model.
  CHECK(r.VerdictFor(PolicyKind::kNoSubsidy, "Q") == Direction::kConstant);
}

TEST_CASE("market capacity sweep without subsidy") {
  const std::vector<double> grid = Linspace(9.0, 36.0, 10);
  const std::array<PolicyKind, 1> none = {PolicyKind::kNoSubsidy};
  const SweepResult r = RunSweep(BaselineParams(), "alpha", grid, none);
  for (std::string_view q : {"q", "b", "a", "Q", "G", "D", "omega", "p"}) {
    CAPTURE(q);
    CHECK(r.VerdictFor(PolicyKind::kNoSubsidy, q) == Direction::kIncreasing);
  }
}

TEST_CASE("infeasible points are skipped with a diagnostic") {
  const std::vector<double> grid{1.0, 2.5, 5.0, 7.0};
  const SweepResult r =
      RunSweep(BaselineParams(), "eta", grid, kDynamicPolicies);
  const SweepSeries& s = r.series[2];
  REQUIRE(s.policy == PolicyKind::kManufacturerD);
  CHECK_FALSE(s.points[0].feasible);
  CHECK_FALSE(s.points[1].feasible);  // below the per-dose threshold 3.04
  CHECK(s.points[2].feasible);
  CHECK_FALSE(r.series[1].points[0].feasible);  // below 1.86
  CHECK(r.series[1].points[1].feasible);
  const auto lines = r.Diagnostics();
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].find("eta=1") != std::string::npos);
  // Verdicts only use feasible points.
  CHECK(r.VerdictFor(PolicyKind::kManufacturerD, "Q") == Direction::kIncreasing);
}

TEST_CASE("serial reference matches the parallel sweep") {
  const std::vector<double> grid = Linspace(4.0, 10.0, 31);
  const SweepResult a = RunSweep(BaselineParams(), "eta", grid,
                                 kDynamicPolicies, Execution::kParallel);
  const SweepResult b = RunSweep(BaselineParams(), "eta", grid,
                                 kDynamicPolicies, Execution::kSerial);
  REQUIRE(a.series.size() == b.series.size());
  for (std::size_t j = 0; j < a.series.size(); ++j) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(a.series[j].points[i].limit == b.series[j].points[i].limit);
      CHECK(a.series[j].points[i].initial == b.series[j].points[i].initial);
    }
  }
}

TEST_CASE("malformed sweeps") {
  const std::vector<double> grid{1.0, 2.0};
  CHECK_THROWS_AS(RunSweep(BaselineParams(), "kappa", grid, kDynamicPolicies),
                  UsageError);
  const std::vector<double> bad{2.0, 1.0};
  CHECK_THROWS_AS(RunSweep(BaselineParams(), "eta", bad, kDynamicPolicies),
                  UsageError);
}

}  // namespace
}  // namespace vaxgame
