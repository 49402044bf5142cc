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

#include "vaxgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <string>

#include "vaxgame/equilibrium.h"
#include "vaxgame/errors.h"
#include "vaxgame/feasibility.h"
#include "vaxgame/trajectory.h"

namespace vaxgame {
namespace {

// Cubic (four-node Lagrange) value halfway between f[i] and f[i+1].
double Midpoint(std::span<const double> f, std::size_t i) {
  const std::size_t n = f.size() - 1;
  if (i == 0) {
    return (5.0 * f[0] + 15.0 * f[1] - 5.0 * f[2] + f[3]) / 16.0;
  }
  if (i + 1 == n) {
    return (f[n - 3] - 5.0 * f[n - 2] + 15.0 * f[n - 1] + 5.0 * f[n]) / 16.0;
  }
  return (-f[i - 1] + 9.0 * f[i] + 9.0 * f[i + 1] - f[i + 2]) / 16.0;
}

// The interior efforts are affine in lambda (with mu = 2 lambda); storing the
// intercept and slope keeps the sweep free of the closure's sign checks.
struct AffineEfforts {
  Efforts intercept;
  Efforts slope;

  AffineEfforts(PolicyKind policy, const ModelParams& params)
      : intercept(EffortsFromCostate(policy, params, 0.0, 0.0)) {
    const Efforts unit = EffortsFromCostate(policy, params, 1.0, 2.0);
    slope.technology = unit.technology - intercept.technology;
    slope.blockchain = unit.blockchain - intercept.blockchain;
    slope.advertising = unit.advertising - intercept.advertising;
  }
};

struct StateRates {
  double quality;
  double goodwill;
};

class Sweep {
 public:
  Sweep(PolicyKind policy, const ModelParams& params, const ReducedSystem& sys,
        double h)
      : params_(params), sys_(sys), efforts_(policy, params), h_(h) {}

  // Forward RK4 for (Q, G) given lambda at the nodes.
  void Forward(std::span<const double> lambda, std::vector<double>& quality,
               std::vector<double>& goodwill) const {
    const std::size_t n = lambda.size() - 1;
    quality[0] = 0.0;
    goodwill[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lam_mid = Midpoint(lambda, i);
      const double q0 = quality[i];
      const double g0 = goodwill[i];
      const StateRates k1 = Rates(q0, g0, lambda[i]);
      const StateRates k2 =
          Rates(q0 + 0.5 * h_ * k1.quality, g0 + 0.5 * h_ * k1.goodwill,
                lam_mid);
      const StateRates k3 =
          Rates(q0 + 0.5 * h_ * k2.quality, g0 + 0.5 * h_ * k2.goodwill,
                lam_mid);
      const StateRates k4 =
          Rates(q0 + h_ * k3.quality, g0 + h_ * k3.goodwill, lambda[i + 1]);
      quality[i + 1] = q0 + h_ / 6.0 *
                                (k1.quality + 2.0 * k2.quality +
                                 2.0 * k3.quality + k4.quality);
      goodwill[i + 1] = g0 + h_ / 6.0 *
                                 (k1.goodwill + 2.0 * k2.goodwill +
                                  2.0 * k3.goodwill + k4.goodwill);
    }
  }

  // Backward RK4 for lambda from lambda(T) = terminal given A at the nodes.
  void Backward(std::span<const double> aggregate, double terminal,
                std::vector<double>& lambda) const {
    const std::size_t n = aggregate.size() - 1;
    lambda[n] = terminal;
    for (std::size_t i = n; i > 0; --i) {
      const double a_mid = Midpoint(aggregate, i - 1);
      const double l0 = lambda[i];
      const double k1 = sys_.CostateRate(aggregate[i], l0);
      const double k2 = sys_.CostateRate(a_mid, l0 - 0.5 * h_ * k1);
      const double k3 = sys_.CostateRate(a_mid, l0 - 0.5 * h_ * k2);
      const double k4 = sys_.CostateRate(aggregate[i - 1], l0 - h_ * k3);
      lambda[i - 1] = l0 - h_ / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

 private:
  StateRates Rates(double quality, double goodwill, double lambda) const {
    const Efforts& c = efforts_.intercept;
    const Efforts& s = efforts_.slope;
    const double q = c.technology + s.technology * lambda;
    const double b = c.blockchain + s.blockchain * lambda;
    const double a = c.advertising + s.advertising * lambda;
    return {params_.theta1 * q - params_.delta * quality,
            params_.theta2 * b + params_.theta3 * a -
                params_.delta * goodwill};
  }

  const ModelParams& params_;
  const ReducedSystem& sys_;
  AffineEfforts efforts_;
  double h_;
};

double SupNorm(std::span<const double> x, std::size_t count) {
  double m = 0.0;
  for (std::size_t i = 0; i < count; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double RelativeSupDiff(std::span<const double> oracle,
                       std::span<const double> closed, std::size_t count) {
  double diff = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    diff = std::max(diff, std::abs(oracle[i] - closed[i]));
  }
  const double scale = SupNorm(closed, count);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

void OracleConfig::Check() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw UsageError("oracle horizon must be positive");
  }
  if (steps < 100) throw UsageError("oracle needs at least 100 steps");
  if (!(relaxation > 0.0 && relaxation <= 1.0)) {
    throw UsageError("oracle relaxation must lie in (0, 1]");
  }
  if (max_iters < 1) throw UsageError("oracle max_iters must be positive");
  if (!(convergence_tol > 0.0)) {
    throw UsageError("oracle convergence_tol must be positive");
  }
  if (!(horizon_tol >= 0.0)) {
    throw UsageError("oracle horizon_tol must be non-negative");
  }
  if (horizon_tol > 0.0 && !(max_horizon >= horizon)) {
    throw UsageError("oracle max_horizon must be at least the horizon");
  }
}

namespace {

OracleResult SolveFixed(PolicyKind policy, const ModelParams& params,
                        const ReducedSystem& sys, const OracleConfig& config,
                        double horizon, std::size_t n) {
  const double h = horizon / static_cast<double>(n);

  OracleResult result;
  result.policy = policy;
  result.stationary = sys.StationaryPoint();
  result.times.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    result.times[i] = horizon * (static_cast<double>(i) /
                                 static_cast<double>(n));
  }
  result.lambda.assign(n + 1, result.stationary.lambda);
  result.quality.assign(n + 1, 0.0);
  result.goodwill.assign(n + 1, 0.0);
  result.aggregate.assign(n + 1, 0.0);

  const Sweep sweep(policy, params, sys, h);
  std::vector<double> image(n + 1);
  const auto refresh_aggregate = [&] {
    for (std::size_t i = 0; i <= n; ++i) {
      result.aggregate[i] = params.gamma1 * result.quality[i] +
                            params.gamma2 * result.goodwill[i];
    }
  };

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    sweep.Forward(result.lambda, result.quality, result.goodwill);
    refresh_aggregate();
    sweep.Backward(result.aggregate, result.stationary.lambda, image);

    double residual = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      residual = std::max(residual, std::abs(image[i] - result.lambda[i]));
    }
    result.residual_history.push_back(residual);
    result.iterations = iter;
    result.max_residual = residual;

    const double w = config.relaxation;
    for (std::size_t i = 0; i <= n; ++i) {
      result.lambda[i] = (1.0 - w) * result.lambda[i] + w * image[i];
    }
    if (w * residual < config.convergence_tol &&
        residual < 10.0 * config.convergence_tol) {
      result.converged = true;
      break;
    }
  }
  // States consistent with the final costate iterate.
  sweep.Forward(result.lambda, result.quality, result.goodwill);
  refresh_aggregate();
  return result;
}

// Sup-norm change of the aggregate and costate over the first `count` nodes.
double PathChange(const OracleResult& a, const OracleResult& b,
                  std::size_t count) {
  return std::max(RelativeSupDiff(a.aggregate, b.aggregate, count),
                  RelativeSupDiff(a.lambda, b.lambda, count));
}

}  // namespace

OracleResult SolveBvp(PolicyKind policy, const ModelParams& params,
                      const OracleConfig& config) {
  config.Check();
  const ReducedSystem sys = BuildReducedSystem(policy, params);
  double horizon = config.horizon;
  std::size_t steps = config.steps;
  OracleResult current = SolveFixed(policy, params, sys, config, horizon, steps);
  if (config.horizon_tol == 0.0) return current;
  while (current.converged) {
    if (2.0 * horizon > config.max_horizon) {
      current.horizon_settled = false;
      return current;
    }
    horizon *= 2.0;
    steps *= 2;
    OracleResult longer = SolveFixed(policy, params, sys, config, horizon, steps);
    // Same step size, so node i of both grids is the same time.
    longer.horizon_change = PathChange(longer, current, steps / 4 + 1);
    current = std::move(longer);
    if (current.horizon_change < config.horizon_tol) break;
  }
  return current;
}

OracleReport OracleCheck(PolicyKind policy, const ModelParams& params,
                         const OracleConfig& config, double compare_end) {
  RequireFeasible(params, policy);
  const OracleResult oracle = SolveBvp(policy, params, config);
  if (!oracle.converged) {
    std::string what = "oracle sweep did not converge after " +
                       std::to_string(oracle.iterations) +
                       " iterations; last residuals:";
    const std::size_t shown = std::min<std::size_t>(
        5, oracle.residual_history.size());
    for (std::size_t i = oracle.residual_history.size() - shown;
         i < oracle.residual_history.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %.3e", oracle.residual_history[i]);
      what += buf;
    }
    throw ConvergenceError(what, oracle.residual_history);
  }
  if (!oracle.horizon_settled) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "oracle paths still moved by %.3e after doubling the "
                  "horizon to %g",
                  oracle.horizon_change, oracle.times.back());
    throw ConvergenceError(buf, oracle.residual_history);
  }
  if (!(compare_end > 0.0) || compare_end > config.horizon) {
    throw UsageError("comparison window must lie within the oracle horizon");
  }

  std::size_t count = 0;
  while (count < oracle.times.size() &&
         oracle.times[count] <= compare_end * (1.0 + 1e-12)) {
    ++count;
  }
  const std::span<const double> window(oracle.times.data(), count);
  const TimeSeries closed = Trajectory(policy, params, window);

  std::vector<double> agg(count), lam(count), qual(count), good(count);
  for (std::size_t i = 0; i < count; ++i) {
    agg[i] = closed[i].aggregate;
    lam[i] = closed[i].lambda;
    qual[i] = closed[i].quality;
    good[i] = closed[i].goodwill;
  }

  OracleReport report;
  report.policy = policy;
  report.compare_end = compare_end;
  report.horizon = oracle.times.back();
  report.aggregate_discrepancy = RelativeSupDiff(oracle.aggregate, agg, count);
  report.costate_discrepancy = RelativeSupDiff(oracle.lambda, lam, count);
  report.quality_discrepancy = RelativeSupDiff(oracle.quality, qual, count);
  report.goodwill_discrepancy = RelativeSupDiff(oracle.goodwill, good, count);
  report.path_discrepancy =
      std::max({report.aggregate_discrepancy, report.costate_discrepancy,
                report.quality_discrepancy, report.goodwill_discrepancy});
  report.initial_costate_oracle = oracle.lambda.front();
  report.initial_costate_closed = closed.front().lambda;
  report.terminal_aggregate = oracle.aggregate.back();
  report.iterations = oracle.iterations;
  report.max_residual = oracle.max_residual;

  const TrajectoryModel model(policy, params);
  report.aggregate_limit = model.path().aggregate_limit;
  report.analytic_rate = model.path().rate;

  // Least-squares slope of log(A(inf) - A(t)) using the oracle's own
  // stationary level.
  const double level = oracle.stationary.aggregate;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double gap = level - oracle.aggregate[i];
    if (!(gap > 1e-12 * std::abs(level))) continue;
    const double x = oracle.times[i];
    const double y = std::log(gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used >= 2) {
    const double m = static_cast<double>(used);
    report.fitted_rate = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  } else {
    report.fitted_rate = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace vaxgame
