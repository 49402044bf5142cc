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

#include "vaxgame/cli/app.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vaxgame/analysis/compare.h"
#include "vaxgame/analysis/propositions.h"
#include "vaxgame/analysis/sweep.h"
#include "vaxgame/cli/config.h"
#include "vaxgame/cli/csv.h"
#include "vaxgame/discount.h"
#include "vaxgame/errors.h"
#include "vaxgame/feasibility.h"
#include "vaxgame/oracle.h"
#include "vaxgame/quantities.h"
#include "vaxgame/saddle_path.h"
#include "vaxgame/steady_state.h"
#include "vaxgame/trajectory.h"

namespace vaxgame::cli {
namespace {

namespace fs = std::filesystem;

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;

  std::string Path(std::string_view file) const {
    fs::create_directories(config.out_dir);
    return (fs::path(config.out_dir) / file).string();
  }

  std::vector<PolicyKind> Policies(std::span<const PolicyKind> fallback) const {
    if (config.policy) return {*config.policy};
    return {fallback.begin(), fallback.end()};
  }

  std::string Header(std::string_view command,
                     std::vector<std::string> extra = {}) const {
    return CsvHeaderComment(command, config.params, extra);
  }
};

std::string Name(PolicyKind p) { return std::string(PolicyName(p)); }

std::vector<std::string> SnapshotColumnNames() {
  std::vector<std::string> names;
  for (const Quantity& q : kSnapshotColumns) names.emplace_back(q.name);
  return names;
}

void AppendSnapshot(std::vector<std::string>& row, const Snapshot& s) {
  for (const Quantity& q : kSnapshotColumns) row.push_back(FormatNumber(q(s)));
}

std::string GridSetting(const RunConfig& c) {
  return "t_end=" + FormatNumber(c.t_end) +
         " points=" + std::to_string(c.points);
}

// ---------------------------------------------------------------- validate

int Validate(Context& ctx) {
  bool ok = true;
  for (PolicyKind policy : ctx.Policies(kAllPolicies)) {
    const FeasibilityReport report = vaxgame::Validate(ctx.config.params, policy);
    bool policy_ok = report.ok();
    std::string regime;
    if (policy_ok) {
      try {
        ComputeSaddlePath(policy, ctx.config.params);
      } catch (const Error& e) {
        policy_ok = false;
        regime = e.what();
      }
    }
    ctx.out << "policy " << Name(policy) << ": "
            << (policy_ok ? "feasible" : "infeasible") << '\n'
            << "  Delta = " << FormatNumber(report.delta_aggregate)
            << ", 8*beta*delta*(r+delta) = "
            << FormatNumber(report.stability_bound) << '\n';
    if (report.interior_T_ok && report.stability_ok) {
      ctx.out << "  interior technology subsidy needs eta >= "
              << FormatNumber(InteriorEtaThresholdT(ctx.config.params)) << '\n';
    }
    if (report.interior_S_ok && report.stability_ok) {
      ctx.out << "  interior per-dose subsidy needs eta >= "
              << FormatNumber(InteriorEtaThresholdS(ctx.config.params)) << '\n';
    }
    for (const std::string& m : report.messages) {
      ctx.err << "error: " << Name(policy) << ": " << m << '\n';
    }
    if (!regime.empty()) ctx.err << "error: " << Name(policy) << ": " << regime << '\n';
    ok = ok && policy_ok;
  }
  return ok ? 0 : ExitCodeFor(ErrorKind::kInfeasible);
}

// ------------------------------------------------------------------ steady

// Discounted value of each party's profit along the full path. The path is
// integrated until the transient has decayed by e^{-30}; the remainder uses
// the steady rate in closed form.
std::array<double, 3> DiscountedValues(PolicyKind policy,
                                       const ModelParams& params,
                                       const Snapshot& limit) {
  const double rate = std::abs(ComputeSaddlePath(policy, params).rate);
  const std::vector<double> grid = UniformGrid(30.0 / rate, 3001);
  const TimeSeries path = Trajectory(policy, params, grid);
  std::array<double, 3> values{};
  const std::array<std::pair<Party, double>, 3> parties = {
      std::pair{Party::kGovernment, limit.government_profit},
      std::pair{Party::kManufacturer, limit.manufacturer_profit},
      std::pair{Party::kRetailer, limit.retailer_profit}};
  for (std::size_t i = 0; i < parties.size(); ++i) {
    DiscountOptions opts;
    opts.steady_rate = parties[i].second;
    values[i] = DiscountedProfit(path, parties[i].first, params.r, opts);
  }
  return values;
}

int Steady(Context& ctx) {
  std::vector<std::string> columns = {"policy"};
  for (std::string& c : SnapshotColumnNames()) columns.push_back(std::move(c));
  columns.insert(columns.end(), {"V_G", "V_M", "V_R"});
  CsvTable table(ctx.Header("steady"), columns);
  for (PolicyKind policy : ctx.Policies(kAllPolicies)) {
    const Snapshot limit = ComputeSteadyState(policy, ctx.config.params).limit;
    std::vector<std::string> row = {Name(policy)};
    AppendSnapshot(row, limit);
    for (double v : DiscountedValues(policy, ctx.config.params, limit)) {
      row.push_back(FormatNumber(v));
    }
    table.AddRow(std::move(row));
    ctx.out << Name(policy) << ": A(inf) = " << FormatNumber(limit.aggregate)
            << ", lambda(inf) = " << FormatNumber(limit.lambda)
            << ", D(inf) = " << FormatNumber(limit.demand)
            << ", pi_G(inf) = " << FormatNumber(limit.government_profit) << '\n';
  }
  const std::string path = ctx.Path("steady.csv");
  table.WriteFile(path);
  ctx.out << "wrote " << path << '\n';
  return 0;
}

// ---------------------------------------------------------------- simulate

int Simulate(Context& ctx) {
  const RunConfig& c = ctx.config;
  const PolicyKind policy = c.policy.value_or(PolicyKind::kNoSubsidy);
  if (c.psi != 0.0 && policy != PolicyKind::kCustomerP) {
    throw UsageError("psi only applies to the customer-p policy");
  }
  const std::vector<double> grid = UniformGrid(c.t_end, c.points);
  TimeSeries series;
  if (policy == PolicyKind::kCustomerP) {
    const TimeSeries base = Trajectory(PolicyKind::kNoSubsidy, c.params, grid);
    const std::vector<double> psi(grid.size(), c.psi);
    series = CustomerPResponse(c.params, psi, base);
  } else {
    series = Trajectory(policy, c.params, grid);
  }
  std::vector<std::string> columns = {"t"};
  for (std::string& n : SnapshotColumnNames()) columns.push_back(std::move(n));
  std::vector<std::string> extra = {"policy=" + Name(policy), GridSetting(c)};
  if (policy == PolicyKind::kCustomerP) extra.push_back("psi=" + FormatNumber(c.psi));
  CsvTable table(ctx.Header("simulate", extra), columns);
  for (const Snapshot& s : series) {
    std::vector<std::string> row = {FormatNumber(s.t)};
    AppendSnapshot(row, s);
    table.AddRow(std::move(row));
  }
  const std::string path = ctx.Path("trajectory_" + Name(policy) + ".csv");
  table.WriteFile(path);
  ctx.out << "wrote " << path << " (" << series.size() << " rows)\n";
  return 0;
}

// ----------------------------------------------------------------- compare

int Compare(Context& ctx) {
  const RunConfig& c = ctx.config;
  const std::vector<double> grid = UniformGrid(c.t_end, c.points);
  const ComparisonTable table = ComparePolicies(c.params, grid, c.tau);
  const std::vector<std::string> extra = {GridSetting(c),
                                          "tau=" + FormatNumber(table.tau)};

  CsvTable signs(ctx.Header("compare", extra),
                 {"column", "manu-q", "manu-d", "min_gap", "max_gap"});
  ctx.out << "tau = " << FormatNumber(table.tau) << '\n'
          << "column       manu-q  manu-d\n";
  for (const ComparisonEntry& e : table.entries) {
    signs.AddRow({CsvField(e.column), std::string(SignSymbol(e.manufacturer_q)),
                  std::string(SignSymbol(e.manufacturer_d)),
                  FormatNumber(e.min_gap), FormatNumber(e.max_gap)});
    std::string label = e.column;
    label.resize(std::max<std::size_t>(label.size(), 12), ' ');
    ctx.out << label << ' ' << SignSymbol(e.manufacturer_q) << "       "
            << SignSymbol(e.manufacturer_d) << '\n';
  }

  std::vector<std::string> columns = {"policy", "t"};
  for (std::string& n : SnapshotColumnNames()) columns.push_back(std::move(n));
  CsvTable values(ctx.Header("compare", extra), columns);
  for (std::size_t i = 0; i < kDynamicPolicies.size(); ++i) {
    for (const Snapshot* s : {&table.early[i], &table.limit[i]}) {
      std::vector<std::string> row = {Name(kDynamicPolicies[i]),
                                      FormatNumber(s->t)};
      AppendSnapshot(row, *s);
      values.AddRow(std::move(row));
    }
  }
  const std::string a = ctx.Path("compare.csv");
  const std::string b = ctx.Path("compare_values.csv");
  signs.WriteFile(a);
  values.WriteFile(b);
  ctx.out << "wrote " << a << "\nwrote " << b << '\n';
  return 0;
}

// ------------------------------------------------------------------- sweep

int SweepCommand(Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.sweep_count < 1) throw UsageError("sweep_count must be at least 1");
  std::vector<double> grid(c.sweep_count);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = grid.size() == 1
                         ? 0.0
                         : static_cast<double>(i) /
                               static_cast<double>(grid.size() - 1);
    grid[i] = c.sweep_from + (c.sweep_to - c.sweep_from) * u;
  }
  const std::vector<PolicyKind> policies = ctx.Policies(kDynamicPolicies);
  const SweepResult r = RunSweep(c.params, c.sweep_param, grid, policies);
  for (const std::string& line : r.Diagnostics()) ctx.err << "note: " << line << '\n';

  const std::vector<std::string> extra = {
      "sweep=" + c.sweep_param, "from=" + FormatNumber(c.sweep_from),
      "to=" + FormatNumber(c.sweep_to),
      "count=" + std::to_string(c.sweep_count)};
  std::vector<std::string> columns = {"policy", c.sweep_param, "feasible",
                                      "price_condition"};
  for (std::string& n : SnapshotColumnNames()) columns.push_back(std::move(n));
  columns.insert(columns.end(), {"lambda_0", "pi_G_0", "pi_M_0", "pi_R_0"});
  CsvTable table(ctx.Header("sweep", extra), columns);
  bool any = false;
  for (const SweepSeries& s : r.series) {
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const SweepPoint& p = s.points[i];
      std::vector<std::string> row = {Name(s.policy), FormatNumber(p.value),
                                      p.feasible ? "1" : "0",
                                      r.price_condition[i] ? "1" : "0"};
      if (p.feasible) {
        any = true;
        AppendSnapshot(row, p.limit);
        for (double v : {p.initial.lambda, p.initial.government_profit,
                         p.initial.manufacturer_profit,
                         p.initial.retailer_profit}) {
          row.push_back(FormatNumber(v));
        }
      } else {
        row.resize(columns.size());
      }
      table.AddRow(std::move(row));
    }
  }
  CsvTable verdicts(ctx.Header("sweep", extra),
                    {"policy", "quantity", "direction"});
  for (const MonotoneVerdict& v : r.verdicts) {
    verdicts.AddRow({Name(v.policy), std::string(v.quantity),
                     std::string(DirectionName(v.direction))});
  }
  ctx.out << "steady-state response to " << c.sweep_param << " over ["
          << FormatNumber(c.sweep_from) << ", " << FormatNumber(c.sweep_to)
          << "]\n";
  for (const SweepSeries& s : r.series) {
    ctx.out << "  " << Name(s.policy) << ':';
    for (std::string_view q : SweepQuantities()) {
      ctx.out << ' ' << q << '=' << DirectionName(r.VerdictFor(s.policy, q));
    }
    ctx.out << '\n';
  }
  ctx.out << "  4*beta*delta*(r+delta) > Delta at every point: "
          << (r.PriceConditionEverywhere() ? "yes" : "no") << '\n';
  const std::string a = ctx.Path("sweep_" + c.sweep_param + ".csv");
  const std::string b = ctx.Path("sweep_" + c.sweep_param + "_verdicts.csv");
  table.WriteFile(a);
  verdicts.WriteFile(b);
  ctx.out << "wrote " << a << "\nwrote " << b << '\n';
  if (!any) {
    ctx.err << "error: no feasible point in the sweep\n";
    return ExitCodeFor(ErrorKind::kInfeasible);
  }
  return 0;
}

// ------------------------------------------------------------------ verify

int Verify(Context& ctx) {
  const RunConfig& c = ctx.config;
  for (PolicyKind policy : ctx.Policies(kDynamicPolicies)) {
    const OracleReport r = OracleCheck(policy, c.params, c.oracle, c.compare_end);
    const std::vector<std::string> extra = {
        "policy=" + Name(policy), "horizon=" + FormatNumber(c.oracle.horizon),
        "steps=" + std::to_string(c.oracle.steps),
        "relaxation=" + FormatNumber(c.oracle.relaxation),
        "tol=" + FormatNumber(c.oracle.convergence_tol),
        "horizon_tol=" + FormatNumber(c.oracle.horizon_tol),
        "compare_end=" + FormatNumber(c.compare_end)};
    CsvTable table(ctx.Header("verify", extra), {"metric", "value"});
    const std::vector<std::pair<std::string, double>> rows = {
        {"path_discrepancy", r.path_discrepancy},
        {"aggregate_discrepancy", r.aggregate_discrepancy},
        {"costate_discrepancy", r.costate_discrepancy},
        {"quality_discrepancy", r.quality_discrepancy},
        {"goodwill_discrepancy", r.goodwill_discrepancy},
        {"lambda0_oracle", r.initial_costate_oracle},
        {"lambda0_closed_form", r.initial_costate_closed},
        {"aggregate_terminal_oracle", r.terminal_aggregate},
        {"aggregate_limit_closed_form", r.aggregate_limit},
        {"fitted_rate", r.fitted_rate},
        {"analytic_rate", r.analytic_rate},
        {"horizon_used", r.horizon},
        {"iterations", static_cast<double>(r.iterations)},
        {"max_residual", r.max_residual}};
    for (const auto& [k, v] : rows) table.AddRow({k, FormatNumber(v)});
    const std::string path = ctx.Path("verify_" + Name(policy) + ".csv");
    table.WriteFile(path);
    ctx.out << Name(policy) << ": sup-norm discrepancy on [0, "
            << FormatNumber(c.compare_end)
            << "] = " << FormatNumber(r.path_discrepancy) << " ("
            << (r.path_discrepancy < 1e-6 ? "within" : "outside")
            << " 1e-6), lambda(0) " << FormatNumber(r.initial_costate_oracle)
            << " vs " << FormatNumber(r.initial_costate_closed)
            << ", fitted rate " << FormatNumber(r.fitted_rate) << " vs "
            << FormatNumber(r.analytic_rate) << ", " << r.iterations
            << " sweeps\n"
            << "wrote " << path << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------- props

int Props(Context& ctx) {
  const std::vector<PropositionCheck> checks =
      PropositionSuite(ctx.config.params, ctx.config.tau);
  CsvTable table(ctx.Header("props"),
                 {"id", "claim", "precondition", "precondition_holds", "holds",
                  "status", "detail"});
  for (const PropositionCheck& c : checks) {
    table.AddRow({CsvField(c.id), CsvField(c.claim), CsvField(c.precondition),
                  c.precondition_holds ? "1" : "0", c.holds ? "1" : "0",
                  std::string(CheckStatusName(c.status())),
                  CsvField(c.detail)});
    ctx.out << c.id << ' ' << CheckStatusName(c.status()) << ": " << c.claim
            << "\n    precondition (" << (c.precondition_holds ? "holds" : "fails")
            << "): " << c.precondition << "\n    values: " << c.detail << '\n';
  }
  const std::string path = ctx.Path("props.csv");
  table.WriteFile(path);
  ctx.out << "wrote " << path << '\n';
  return 0;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Open-loop equilibria of a vaccine supply chain under "
               "government subsidy policies"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> assignments;
  // Flags are turned into settings, applied after the config file in this
  // order.
  struct FlagKey {
    std::string flag;
    std::string key;
    std::string help;
  };
  const std::vector<FlagKey> flag_keys = {
      {"--policy", "policy", "none, manu-q, manu-d or customer-p"},
      {"--t-end", "t_end", "end of the simulated time grid"},
      {"--points", "points", "number of grid points"},
      {"--psi", "psi", "constant customer-p reimbursement in [0, 1)"},
      {"--tau", "tau", "early comparison time, default from the decay rates"},
      {"--param", "sweep_param", "parameter to sweep"},
      {"--from", "sweep_from", "first sweep value"},
      {"--to", "sweep_to", "last sweep value"},
      {"--count", "sweep_count", "number of sweep values"},
      {"--oracle-horizon", "oracle_horizon", "oracle truncation time"},
      {"--oracle-steps", "oracle_steps", "oracle grid steps"},
      {"--oracle-tol", "oracle_tol", "oracle sweep convergence tolerance"},
      {"--compare-end", "compare_end", "end of the oracle comparison window"},
      {"--out", "out_dir", "output directory"}};
  std::vector<std::string> flag_values(flag_keys.size());
  std::vector<CLI::Option*> flag_options;

  app.add_option("--config", config_path, "key=value parameter file");
  app.add_option("--set", assignments, "override one setting, key=value")
      ->take_all();
  for (std::size_t i = 0; i < flag_keys.size(); ++i) {
    flag_options.push_back(app.add_option(flag_keys[i].flag, flag_values[i],
                                          flag_keys[i].help + " (" +
                                              flag_keys[i].key + ")"));
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check stability and interior conditions"},
      {"steady", "steady state of every policy (steady.csv)"},
      {"simulate", "equilibrium path on a time grid (trajectory_<policy>.csv)"},
      {"compare", "manu-q against manu-d signs (compare.csv)"},
      {"sweep", "steady-state response to one parameter (sweep_<param>.csv)"},
      {"verify", "closed form against the numerical oracle (verify_<policy>.csv)"},
      {"props", "proposition ledger (props.csv)"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : ExitCodeFor(ErrorKind::kUsage);
  }

  try {
    Context ctx{RunConfig{}, out, err};
    std::set<std::string> provided;
    if (!config_path.empty()) {
      for (std::string& k : ApplyConfigFile(ctx.config, config_path)) {
        provided.insert(std::move(k));
      }
    }
    for (std::size_t i = 0; i < flag_keys.size(); ++i) {
      if (flag_options[i]->count() > 0) {
        ApplySetting(ctx.config, flag_keys[i].key, flag_values[i]);
      }
    }
    for (const std::string& a : assignments) {
      const auto [key, value] = SplitAssignment(a);
      ApplySetting(ctx.config, key, value);
      if (IsParamName(key)) provided.insert(key);
    }
    std::string missing;
    for (std::string_view name : kParamNames) {
      if (provided.count(std::string(name))) continue;
      missing += (missing.empty() ? "" : ", ") + std::string(name) + "=" +
                 FormatNumber(ParamValue(ctx.config.params, name));
    }
    if (!missing.empty()) {
      err << "note: baseline values used for " << missing << '\n';
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const std::map<std::string, std::function<int(Context&)>> handlers = {
        {"validate", Validate}, {"steady", Steady},       {"simulate", Simulate},
        {"compare", Compare},   {"sweep", SweepCommand}, {"verify", Verify},
        {"props", Props}};
    if (command != "validate") CheckFieldValidity(ctx.config.params);
    return handlers.at(command)(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(ErrorKind::kUsage);
  }
}

}  // namespace vaxgame::cli
