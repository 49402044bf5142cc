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

#ifndef VAXGAME_ERRORS_H_
#define VAXGAME_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace vaxgame {

enum class ErrorKind {
  kUsage,           // malformed input or API misuse
  kInfeasible,      // parameters violate a stability or interior condition
  kRegime,          // a subsidy clamp binds or a control turns negative
  kNonConvergence,  // the numerical oracle did not reach its tolerance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorKind::kUsage, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorKind::kInfeasible, what) {}
};

// The positive-part clamp on a subsidy binds somewhere on the path. Only the
// interior regime is modelled, so this is reported instead of switching
// dynamics.
class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& what)
      : Error(ErrorKind::kRegime, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history)
      : Error(ErrorKind::kNonConvergence, what), history_(std::move(history)) {}
  const std::vector<double>& residual_history() const { return history_; }

 private:
  std::vector<double> history_;
};

// 0 success, 1 usage, 2 infeasible (including regime violations),
// 3 non-convergence.
int ExitCodeFor(ErrorKind kind);

}  // namespace vaxgame

#endif  // VAXGAME_ERRORS_H_
