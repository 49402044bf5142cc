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

///////////////////////////////////////////////////////////////////////////////
//
// Numerical verification of the closed-form equilibrium. The two-point
// boundary value problem
//
//   Q' = theta1 q(lambda) - delta Q,          Q(0) = 0
//   G' = theta2 b(lambda) + theta3 a(lambda) - delta G,   G(0) = 0
//   lambda' = (r + delta) lambda - c (gamma1 Q + gamma2 G + s_lambda),
//   lambda(T) = lambda(inf)
//
// is solved by a damped forward-backward sweep with classical RK4 on a
// uniform grid. The truncated horizon pins lambda(T) to the stationary value
// of the reduced system; along the saddle the error this introduces decays
// like exp(k T).
//
// Nothing here reads the saddle-path solution. Only the parameters, the
// effort closures and the reduced costate coefficients are used.
//
///////////////////////////////////////////////////////////////////////////////

#ifndef VAXGAME_ORACLE_H_
#define VAXGAME_ORACLE_H_

#include <cstddef>
#include <limits>
#include <vector>

#include "vaxgame/params.h"
#include "vaxgame/steady_state.h"

namespace vaxgame {

struct OracleConfig {
  double horizon = 200.0;
  std::size_t steps = 20000;
  double relaxation = 0.5;  // weight of the new sweep in the damped update
  int max_iters = 20000;
  double convergence_tol = 1e-10;  // sup-norm change between iterates
  // When positive, the horizon doubles (at a fixed step size) until the
  // aggregate and costate paths on [0, horizon/2] change by less than this,
  // relative to their sup-norm. Zero keeps the horizon fixed.
  double horizon_tol = 0.0;
  double max_horizon = 10000.0;

  // Throws UsageError unless horizon > 0, steps >= 100, 0 < relaxation <= 1,
  // max_iters >= 1, convergence_tol > 0, horizon_tol >= 0 and, when
  // doubling is on, max_horizon >= horizon.
  void Check() const;
};

struct OracleResult {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  std::vector<double> times;
  std::vector<double> aggregate;
  std::vector<double> lambda;
  std::vector<double> quality;
  std::vector<double> goodwill;
  ReducedSystem::Point stationary;  // used for the terminal condition
  bool converged = false;
  int iterations = 0;
  // Sup-norm distance between the last iterate and its undamped sweep image.
  double max_residual = 0.0;
  std::vector<double> residual_history;
  // Relative change on [0, horizon/2] from the last horizon doubling; NaN if
  // the horizon was fixed.
  double horizon_change = std::numeric_limits<double>::quiet_NaN();
  // False if horizon_tol was not met within max_horizon.
  bool horizon_settled = true;
};

// Runs the sweep to convergence or max_iters. Throws InfeasibleError for
// infeasible parameters; non-convergence is reported through `converged`.
OracleResult SolveBvp(PolicyKind policy, const ModelParams& params,
                      const OracleConfig& config = {});

struct OracleReport {
  PolicyKind policy = PolicyKind::kNoSubsidy;
  double compare_end = 0.0;
  double horizon = 0.0;  // the horizon actually solved on
  // Sup-norm of (oracle - closed form) over [0, compare_end], divided by the
  // sup-norm of the closed-form path.
  double aggregate_discrepancy = 0.0;
  double costate_discrepancy = 0.0;
  double quality_discrepancy = 0.0;
  double goodwill_discrepancy = 0.0;
  double path_discrepancy = 0.0;  // max of the four above
  double initial_costate_oracle = 0.0;
  double initial_costate_closed = 0.0;
  double terminal_aggregate = 0.0;  // oracle A(T)
  double aggregate_limit = 0.0;     // closed-form A(inf)
  double fitted_rate = 0.0;    // log-linear fit of A(inf) - A(t), NaN if A == 0
  double analytic_rate = 0.0;  // k
  int iterations = 0;
  double max_residual = 0.0;
};

// Solves the BVP and compares it with the closed-form trajectory on the
// oracle grid restricted to [0, compare_end]. Throws ConvergenceError (with
// the residual history) if the sweep does not converge.
OracleReport OracleCheck(PolicyKind policy, const ModelParams& params,
                         const OracleConfig& config = {},
                         double compare_end = 100.0);

}  // namespace vaxgame

#endif  // VAXGAME_ORACLE_H_
