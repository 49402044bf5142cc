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

#include "vaxgame/analysis/compare.h"

#include <string>

#include "doctest.h"
#include "support/reference.h"
#include "vaxgame/analysis/propositions.h"
#include "vaxgame/sampling.h"
#include "vaxgame/steady_state.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {
namespace {

namespace fz = testing::frozen;
using testing::RelErr;

TEST_CASE("sign helper") {
  const std::vector<double> pos{1.0, 2.0}, neg{-1.0, -0.5}, mixed{1.0, -1.0},
      tie{1.0, 0.0};
  CHECK(SignOf(pos) == Sign::kHigher);
  CHECK(SignOf(neg) == Sign::kLower);
  CHECK(SignOf(mixed) == Sign::kMixed);
  CHECK(SignOf(tie) == Sign::kMixed);
  CHECK(SignSymbol(Sign::kHigher) == "+");
}

TEST_CASE("early time rule at baseline") {
  // The fastest rate is manu-d's k = -0.0955, so 1/(10|k|) > 0.1.
  CHECK(EarlyTime(BaselineParams()) == 0.1);
  ModelParams p = BaselineParams();
  p.delta = 2.0;  // every rate is now below -2
  CHECK(EarlyTime(p) < 0.06);
}

TEST_CASE("baseline sign table") {
  const ModelParams p = BaselineParams();
  const ComparisonTable table = ComparePolicies(p, UniformGrid(100.0, 1000));
  CHECK(table.tau == 0.1);
  const std::vector<std::pair<std::string, Sign>> expected = {
      {"q,b,a", Sign::kHigher},  {"A", Sign::kHigher},
      {"omega,p", Sign::kHigher}, {"D(tau)", Sign::kLower},
      {"D(inf)", Sign::kHigher}, {"pi_G(tau)", Sign::kLower},
      {"pi_G(inf)", Sign::kHigher}};
  REQUIRE(table.entries.size() == expected.size());
  for (const auto& [column, sign] : expected) {
    CAPTURE(column);
    const ComparisonEntry& e = table.Entry(column);
    CHECK(e.manufacturer_q == sign);
    CHECK(e.manufacturer_d ==
          (sign == Sign::kHigher ? Sign::kLower : Sign::kHigher));
  }
  CHECK(RelErr(table.limit[0].retail_price, fz::none::kRetailInf) < 1e-12);
  CHECK(RelErr(table.limit[1].retail_price, fz::manu_q::kRetailInf) < 1e-12);
  CHECK(RelErr(table.limit[2].retail_price, fz::manu_d::kRetailInf) < 1e-12);
  CHECK(RelErr(table.early[0].demand, fz::none::kDemandTau) < 1e-12);
  CHECK(RelErr(table.early[1].government_profit, fz::manu_q::kGovTau) < 1e-12);
  CHECK(table.limit[2].government_profit < table.limit[1].government_profit);
  CHECK(table.limit[0].government_profit < table.limit[2].government_profit);
}

TEST_CASE("comparison is the same serially and in parallel") {
  const ModelParams p = BaselineParams();
  const auto grid = UniformGrid(100.0, 1000);
  const ComparisonTable a = ComparePolicies(p, grid, std::nullopt,
                                            Execution::kParallel);
  const ComparisonTable b = ComparePolicies(p, grid, std::nullopt,
                                            Execution::kSerial);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].min_gap == b.entries[i].min_gap);
    CHECK(a.entries[i].max_gap == b.entries[i].max_gap);
  }
}

TEST_CASE("proposition suite at baseline") {
  const std::vector<PropositionCheck> checks =
      PropositionSuite(BaselineParams());
  const auto find = [&](const std::string& id) -> const PropositionCheck& {
    for (const PropositionCheck& c : checks) {
      if (c.id == id) return c;
    }
    FAIL("missing check " << id);
    return checks.front();
  };
  for (const char* id : {"9(1)", "10(1)", "11(1)", "11(2)", "12(1)", "12(2)",
                         "13(1)", "13(2)", "14(1)", "14(2)", "14(3)"}) {
    CAPTURE(id);
    CHECK(find(id).status() == CheckStatus::kPass);
    CHECK_FALSE(find(id).detail.empty());
  }
  // eta = 7 is below twice the demand threshold (2 x 4.3035).
  CHECK(find("9(2)").status() == CheckStatus::kNotApplicable);
  CHECK(find("10(2)").status() == CheckStatus::kNotApplicable);
  CHECK(DemandEtaThreshold(BaselineParams()) ==
        doctest::Approx(18.0 * 1.6816 / (14.0 * 0.5024)).epsilon(1e-12));
  CHECK(StabilityRatio(BaselineParams()) ==
        doctest::Approx(0.2256 / 0.728).epsilon(1e-12));
  CHECK(find("12(2)").precondition.find("n = 0.30989") != std::string::npos);
}

TEST_CASE("large-eta propositions pass once eta is large") {
  ModelParams p = BaselineParams();
  p.eta = LargeEtaThreshold(p);
  for (const PropositionCheck& c : PropositionSuite(p)) {
    CAPTURE(c.id);
    CHECK(c.status() == CheckStatus::kPass);
  }
}

TEST_CASE("infeasible parameters mark checks as not applicable") {
  ModelParams p = BaselineParams();
  p.eta = 1.0;  // both subsidies leave the interior regime
  for (const PropositionCheck& c : PropositionSuite(p)) {
    CAPTURE(c.id);
    CHECK(c.status() == CheckStatus::kNotApplicable);
  }
}

TEST_CASE("subsidy on technology never lowers steady profits") {
  ParamSampler sampler(BaselineParams(), 99);
  const auto draws = SampleFeasible(sampler, 100, [](const ModelParams& p) {
    const std::array<PolicyKind, 2> both = {PolicyKind::kNoSubsidy,
                                            PolicyKind::kManufacturerQ};
    return IsFeasibleFor(p, both);
  });
  for (const ModelParams& p : draws) {
    const Snapshot n = ComputeSteadyState(PolicyKind::kNoSubsidy, p).limit;
    const Snapshot t = ComputeSteadyState(PolicyKind::kManufacturerQ, p).limit;
    CHECK(t.government_profit >= n.government_profit);
    CHECK(t.manufacturer_profit >= n.manufacturer_profit);
  }
}

}  // namespace
}  // namespace vaxgame
