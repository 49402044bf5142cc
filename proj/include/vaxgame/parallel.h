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

#ifndef VAXGAME_PARALLEL_H_
#define VAXGAME_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace vaxgame {

// kSerial is the reference path; kParallel must produce identical results.
enum class Execution { kSerial, kParallel };

// Evaluates fn(0), ..., fn(n-1) and returns the results in index order. With
// kParallel the indices are distributed over OpenMP threads. An exception
// thrown for any index is rethrown after the loop; the lowest failing index
// wins so both paths report the same error.
template <typename Fn>
auto MapIndexed(std::size_t n, Execution exec, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto body = [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::kParallel) {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(n);
  for (std::optional<Result>& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace vaxgame

#endif  // VAXGAME_PARALLEL_H_
