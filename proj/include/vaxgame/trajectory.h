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

#ifndef VAXGAME_TRAJECTORY_H_
#define VAXGAME_TRAJECTORY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "vaxgame/equilibrium.h"
#include "vaxgame/parallel.h"
#include "vaxgame/params.h"
#include "vaxgame/saddle_path.h"

namespace vaxgame {

using TimeSeries = std::vector<Snapshot>;

// `points` samples from 0 to t_end inclusive. Throws UsageError for
// points < 2 or a non-positive t_end.
std::vector<double> UniformGrid(double t_end, std::size_t points);

// Throws UsageError unless the grid is non-empty, finite, starts at 0 and is
// strictly increasing.
void CheckGrid(std::span<const double> grid);

// Closed-form equilibrium path of one policy. Quality and goodwill integrate
// the linear ODEs Q' = theta1 q - delta Q, G' = theta2 b + theta3 a - delta G
// exactly: with q(t) = q(inf) + q_k e^{kt},
//
//   Q(t) = Q(inf) (1 - e^{-delta t}) + theta1 q_k (e^{kt} - e^{-delta t})/(k+delta)
//
// which keeps Q(0) = 0 and degrades gracefully to t e^{-delta t} as k -> -delta.
class TrajectoryModel {
 public:
  TrajectoryModel(PolicyKind policy, const ModelParams& params);

  // Throws RegimeError if a subsidy clamp binds at t.
  Snapshot At(double t) const;

  const SaddlePath& path() const { return path_; }
  PolicyKind policy() const { return policy_; }

 private:
  PolicyKind policy_;
  ModelParams params_;
  SaddlePath path_;
  double quality_forcing_ = 0.0;   // theta1 * q_k
  double goodwill_forcing_ = 0.0;  // theta2 * b_k + theta3 * a_k
};

// Samples the equilibrium path on `grid`. The parallel kernel and the serial
// reference give bit-identical output. Customer-p is returned at psi = 0;
// use CustomerPResponse() for a reimbursement path.
TimeSeries Trajectory(PolicyKind policy, const ModelParams& params,
                      std::span<const double> grid,
                      Execution exec = Execution::kParallel);

// Price response to a reimbursement path psi(t) on top of a no-subsidy base
// series: omega and p scale by 1/(1 - psi); states, efforts and demand are
// those of the base. Throws UsageError for psi outside [0, 1) or a size
// mismatch.
TimeSeries CustomerPResponse(const ModelParams& params,
                             std::span<const double> psi_path,
                             const TimeSeries& base);

}  // namespace vaxgame

#endif  // VAXGAME_TRAJECTORY_H_
