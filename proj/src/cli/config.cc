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

#include "vaxgame/cli/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "vaxgame/errors.h"

namespace vaxgame::cli {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t ParseCount(std::string_view text, std::string_view what) {
  const double v = ParseNumber(text, what);
  if (v < 0.0 || v != std::floor(v) || v > 1e9) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" +
                     std::string(text) + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

const std::vector<std::string_view>& RunSettingKeys() {
  static const std::vector<std::string_view> keys = {
      "policy",         "t_end",          "points",
      "psi",            "tau",            "oracle_horizon",
      "oracle_steps",   "oracle_relaxation", "oracle_max_iters",
      "oracle_tol",     "oracle_horizon_tol", "compare_end",
      "sweep_param",
      "sweep_from",     "sweep_to",       "sweep_count",
      "out_dir"};
  return keys;
}

double ParseNumber(std::string_view text, std::string_view what) {
  const std::string_view t = Trim(text);
  double value = 0.0;
  const char* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("cannot parse '" + std::string(text) + "' as a number for " +
                     std::string(what));
  }
  return value;
}

void ApplySetting(RunConfig& c, std::string_view key, std::string_view value) {
  value = Trim(value);
  if (IsParamName(key)) {
    ParamRef(c.params, key) = ParseNumber(value, key);
    return;
  }
  if (key == "policy") {
    c.policy = ParsePolicy(value);
  } else if (key == "t_end") {
    c.t_end = ParseNumber(value, key);
  } else if (key == "points") {
    c.points = ParseCount(value, key);
  } else if (key == "psi") {
    c.psi = ParseNumber(value, key);
    if (!(c.psi >= 0.0 && c.psi < 1.0)) {
      throw UsageError("psi must lie in [0, 1)");
    }
  } else if (key == "tau") {
    c.tau = ParseNumber(value, key);
  } else if (key == "oracle_horizon") {
    c.oracle.horizon = ParseNumber(value, key);
  } else if (key == "oracle_steps") {
    c.oracle.steps = ParseCount(value, key);
  } else if (key == "oracle_relaxation") {
    c.oracle.relaxation = ParseNumber(value, key);
  } else if (key == "oracle_max_iters") {
    c.oracle.max_iters = static_cast<int>(ParseCount(value, key));
  } else if (key == "oracle_tol") {
    c.oracle.convergence_tol = ParseNumber(value, key);
  } else if (key == "oracle_horizon_tol") {
    c.oracle.horizon_tol = ParseNumber(value, key);
  } else if (key == "compare_end") {
    c.compare_end = ParseNumber(value, key);
  } else if (key == "sweep_param") {
    if (!IsParamName(value)) {
      throw UsageError("sweep_param must be a model parameter, got '" +
                       std::string(value) + "'");
    }
    c.sweep_param = std::string(value);
  } else if (key == "sweep_from") {
    c.sweep_from = ParseNumber(value, key);
  } else if (key == "sweep_to") {
    c.sweep_to = ParseNumber(value, key);
  } else if (key == "sweep_count") {
    c.sweep_count = ParseCount(value, key);
  } else if (key == "out_dir") {
    if (value.empty()) throw UsageError("out_dir must not be empty");
    c.out_dir = std::string(value);
  } else {
    throw UsageError("unknown setting '" + std::string(key) + "'");
  }
}

std::pair<std::string, std::string> SplitAssignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw UsageError("expected key=value, got '" + std::string(text) + "'");
  }
  const std::string_view key = Trim(text.substr(0, eq));
  if (key.empty()) {
    throw UsageError("missing key in '" + std::string(text) + "'");
  }
  return {std::string(key), std::string(Trim(text.substr(eq + 1)))};
}

std::vector<std::string> ApplyConfigFile(RunConfig& config,
                                         const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::vector<std::string> set;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    try {
      const auto [key, value] = SplitAssignment(view);
      ApplySetting(config, key, value);
      if (IsParamName(key)) set.push_back(key);
    } catch (const UsageError& e) {
      throw UsageError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return set;
}

}  // namespace vaxgame::cli
