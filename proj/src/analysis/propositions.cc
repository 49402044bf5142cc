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

#include "vaxgame/analysis/propositions.h"

#include <array>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <utility>

#include "vaxgame/analysis/compare.h"
#include "vaxgame/errors.h"
#include "vaxgame/feasibility.h"
#include "vaxgame/steady_state.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {
namespace {

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// Per-policy values; `error` is set when the policy is infeasible.
struct Evaluated {
  std::optional<Snapshot> early;
  std::optional<Snapshot> limit;
  std::string error;
};

Evaluated EvaluatePolicy(PolicyKind policy, const ModelParams& params,
                         std::optional<double> tau) {
  Evaluated e;
  try {
    e.limit = ComputeSteadyState(policy, params).limit;
    if (tau) e.early = TrajectoryModel(policy, params).At(*tau);
  } catch (const Error& err) {
    e.limit.reset();
    e.error = std::string(PolicyName(policy)) + " infeasible: " + err.what();
  }
  return e;
}

class Builder {
 public:
  Builder(const std::array<Evaluated, 3>& eval, std::optional<double> tau)
      : eval_(eval), tau_(tau) {}

  // `policies` index into eval (0 none, 1 manu-q, 2 manu-d).
  void Add(std::string id, std::string claim,
           std::initializer_list<int> policies, bool early,
           std::optional<std::pair<std::string, bool>> extra,
           const std::function<std::pair<bool, std::string>(
               const Snapshot*, const Snapshot*, const Snapshot*)>& eval) {
    PropositionCheck c;
    c.id = std::move(id);
    c.claim = std::move(claim);
    std::string why;
    bool ok = true;
    for (int i : policies) {
      if (!eval_[i].limit || (early && !eval_[i].early)) {
        ok = false;
        why = eval_[i].error.empty() ? "early time unavailable" : eval_[i].error;
        break;
      }
    }
    c.precondition = "interior equilibrium for the policies compared";
    if (early && tau_) c.precondition += "; tau = " + Num(*tau_);
    if (extra) {
      c.precondition += "; " + extra->first;
      ok = ok && extra->second;
    }
    c.precondition_holds = ok;
    const auto pick = [&](int i) -> const Snapshot* {
      const std::optional<Snapshot>& s = early ? eval_[i].early : eval_[i].limit;
      return s ? &*s : nullptr;
    };
    const Snapshot* none = pick(0);
    const Snapshot* t = pick(1);
    const Snapshot* s = pick(2);
    bool have = true;
    for (int i : policies) have = have && pick(i) != nullptr;
    if (have) {
      auto [holds, detail] = eval(none, t, s);
      c.holds = holds;
      c.detail = std::move(detail);
    } else {
      c.detail = why;
    }
    checks_.push_back(std::move(c));
  }

  std::vector<PropositionCheck> Take() { return std::move(checks_); }

 private:
  const std::array<Evaluated, 3>& eval_;
  std::optional<double> tau_;
  std::vector<PropositionCheck> checks_;
};

}  // namespace

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      break;
  }
  return "n/a";
}

CheckStatus PropositionCheck::status() const {
  if (!precondition_holds) return CheckStatus::kNotApplicable;
  return holds ? CheckStatus::kPass : CheckStatus::kFail;
}

double DemandEtaThreshold(const ModelParams& p) {
  const double delta = ComputeDelta(p);
  const double rd = p.delta * (p.r + p.delta);
  return p.alpha * (16.0 * p.beta * rd + delta) /
         (2.0 * p.beta * (8.0 * p.beta * rd - delta));
}

double LargeEtaThreshold(const ModelParams& p) {
  return 2.0 * DemandEtaThreshold(p);
}

double StabilityRatio(const ModelParams& p) {
  return ComputeDelta(p) / StabilityBound(p);
}

std::vector<PropositionCheck> PropositionSuite(const ModelParams& params,
                                               std::optional<double> tau) {
  CheckFieldValidity(params);
  if (!tau) {
    try {
      tau = EarlyTime(params);
    } catch (const Error&) {
      tau.reset();
    }
  }
  const std::array<Evaluated, 3> eval = {
      EvaluatePolicy(PolicyKind::kNoSubsidy, params, tau),
      EvaluatePolicy(PolicyKind::kManufacturerQ, params, tau),
      EvaluatePolicy(PolicyKind::kManufacturerD, params, tau)};
  Builder b(eval, tau);

  const double large_eta = LargeEtaThreshold(params);
  const std::pair<std::string, bool> eta_large{
      "eta = " + Num(params.eta) + " >= 2 x demand threshold = " +
          Num(large_eta),
      params.eta >= large_eta};

  b.Add("9(1)", "pi_G^T(inf) >= pi_G^*(inf)", {0, 1}, false, std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot*) {
          return std::pair{t->government_profit >= n->government_profit,
                           Num(t->government_profit) + " vs " +
                               Num(n->government_profit)};
        });
  b.Add("9(2)", "pi_G^S(inf) > pi_G^*(inf)", {0, 2}, false, eta_large,
        [](const Snapshot* n, const Snapshot*, const Snapshot* s) {
          return std::pair{s->government_profit > n->government_profit,
                           Num(s->government_profit) + " vs " +
                               Num(n->government_profit)};
        });
  b.Add("10(1)", "pi_M^T(inf) >= pi_M^*(inf)", {0, 1}, false, std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot*) {
          return std::pair{t->manufacturer_profit >= n->manufacturer_profit,
                           Num(t->manufacturer_profit) + " vs " +
                               Num(n->manufacturer_profit)};
        });
  b.Add("10(2)", "pi_M^S(inf) > pi_M^*(inf)", {0, 2}, false, eta_large,
        [](const Snapshot* n, const Snapshot*, const Snapshot* s) {
          return std::pair{s->manufacturer_profit > n->manufacturer_profit,
                           Num(s->manufacturer_profit) + " vs " +
                               Num(n->manufacturer_profit)};
        });
  b.Add("11(1)", "q^T >= q^*, b^T >= b^*, a^T >= a^* at inf", {0, 1}, false,
        std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot*) {
          return std::pair{t->technology >= n->technology &&
                               t->blockchain >= n->blockchain &&
                               t->advertising >= n->advertising,
                           "q " + Num(t->technology) + " vs " +
                               Num(n->technology) + "; b " +
                               Num(t->blockchain) + " vs " +
                               Num(n->blockchain) + "; a " +
                               Num(t->advertising) + " vs " +
                               Num(n->advertising)};
        });
  b.Add("11(2)", "q^T(inf) > q^S(inf)", {1, 2}, false, std::nullopt,
        [](const Snapshot*, const Snapshot* t, const Snapshot* s) {
          return std::pair{t->technology > s->technology,
                           Num(t->technology) + " vs " + Num(s->technology)};
        });
  b.Add("12(1)", "A^T(inf) >= A^*(inf)", {0, 1}, false, std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot*) {
          return std::pair{t->aggregate >= n->aggregate,
                           Num(t->aggregate) + " vs " + Num(n->aggregate)};
        });

  const double n = StabilityRatio(params);
  const double tech = params.gamma1 * params.gamma1 * params.theta1 *
                      params.theta1;
  const double brand = params.gamma2 * params.gamma2 *
                       (2.0 * params.theta2 * params.theta2 +
                        params.theta3 * params.theta3);
  const double lhs = (6.0 - n) / (1.0 - n);
  const bool n_ok = n > 0.0 && n < 1.0 && tech > 0.0 && lhs > brand / tech;
  b.Add("12(2)", "A^T(inf) > A^S(inf)", {1, 2}, false,
        std::pair{"n = " + Num(n) + ", (6-n)/(1-n) = " + Num(lhs) +
                      " > gamma2^2(2theta2^2+theta3^2)/(gamma1^2theta1^2) = " +
                      (tech > 0.0 ? Num(brand / tech) : std::string("inf")),
                  n_ok},
        [](const Snapshot*, const Snapshot* t, const Snapshot* s) {
          return std::pair{t->aggregate > s->aggregate,
                           Num(t->aggregate) + " vs " + Num(s->aggregate)};
        });

  const auto three_way = [](double lo, double mid, double hi, bool strict_hi) {
    return lo < mid && (strict_hi ? mid < hi : mid <= hi);
  };
  b.Add("13(1)", "p^S < p^* < p^T and omega^S < omega^* < omega^T at tau",
        {0, 1, 2}, true, std::nullopt,
        [&](const Snapshot* n, const Snapshot* t, const Snapshot* s) {
          return std::pair{
              three_way(s->retail_price, n->retail_price, t->retail_price,
                        true) &&
                  three_way(s->wholesale_price, n->wholesale_price,
                            t->wholesale_price, true),
              "p " + Num(s->retail_price) + " / " + Num(n->retail_price) +
                  " / " + Num(t->retail_price) + "; omega " +
                  Num(s->wholesale_price) + " / " + Num(n->wholesale_price) +
                  " / " + Num(t->wholesale_price)};
        });
  b.Add("13(2)", "p^S < p^* <= p^T and omega^S < omega^* <= omega^T at inf",
        {0, 1, 2}, false, std::nullopt,
        [&](const Snapshot* n, const Snapshot* t, const Snapshot* s) {
          return std::pair{
              three_way(s->retail_price, n->retail_price, t->retail_price,
                        false) &&
                  three_way(s->wholesale_price, n->wholesale_price,
                            t->wholesale_price, false),
              "p " + Num(s->retail_price) + " / " + Num(n->retail_price) +
                  " / " + Num(t->retail_price) + "; omega " +
                  Num(s->wholesale_price) + " / " + Num(n->wholesale_price) +
                  " / " + Num(t->wholesale_price)};
        });
  b.Add("14(1)", "D^S(tau) > D^T(tau) > D^*(tau)", {0, 1, 2}, true,
        std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot* s) {
          return std::pair{s->demand > t->demand && t->demand > n->demand,
                           Num(s->demand) + " / " + Num(t->demand) + " / " +
                               Num(n->demand)};
        });
  b.Add("14(2)", "D^T(inf) >= D^*(inf)", {0, 1}, false, std::nullopt,
        [](const Snapshot* n, const Snapshot* t, const Snapshot*) {
          return std::pair{t->demand >= n->demand,
                           Num(t->demand) + " vs " + Num(n->demand)};
        });
  const double demand_eta = DemandEtaThreshold(params);
  b.Add("14(3)", "D^S(inf) > D^*(inf)", {0, 2}, false,
        std::pair{"eta = " + Num(params.eta) + " > " + Num(demand_eta),
                  params.eta > demand_eta},
        [](const Snapshot* n, const Snapshot*, const Snapshot* s) {
          return std::pair{s->demand > n->demand,
                           Num(s->demand) + " vs " + Num(n->demand)};
        });
  return b.Take();
}

}  // namespace vaxgame
