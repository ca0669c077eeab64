// Copyright 2026 The semuav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// semuav: solve, sweep and verify the UAV semantic-pipeline energy problem.
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 bad configuration or usage, 3 no feasible configuration.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "semuav/baselines.hpp"
#include "semuav/experiment.hpp"
#include "semuav/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct CommonFlags {
  std::string config_path;
  std::optional<std::size_t> grid_n;
  std::vector<std::string> schemes;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "YAML scenario file (defaults when omitted)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--grid-n", f.grid_n, "power grid points per axis")->check(CLI::Range(2, 100000));
  cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::Range(1, 1024));
}

semuav::ScenarioConfig load(const CommonFlags& f) {
  semuav::ScenarioConfig cfg =
      f.config_path.empty() ? semuav::ScenarioConfig{} : semuav::load_config(f.config_path);
  if (f.grid_n) {
    cfg.grid.n_pu = *f.grid_n;
    cfg.grid.n_pb = *f.grid_n;
  }
  if (!f.schemes.empty()) {
    cfg.schemes.clear();
    for (const std::string& s : f.schemes) cfg.schemes.push_back(semuav::parse_scheme(s));
  }
  return cfg;
}

int run_solve(const CommonFlags& f) {
  const semuav::ScenarioConfig cfg = load(f);
  const semuav::SystemParams params = cfg.to_params();
  const std::vector<semuav::Scheme> schemes =
      f.schemes.empty() ? std::vector<semuav::Scheme>{semuav::Scheme::kProposed} : cfg.schemes;
  bool any_feasible = false;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const semuav::Solution sol =
        semuav::run_scheme(params, schemes[i], cfg.grid, cfg.bcd, f.workers);
    if (i > 0) std::cout << "\n";
    std::cout << semuav::describe(sol);
    any_feasible |= sol.feasible;
  }
  return any_feasible ? 0 : kExitInfeasible;
}

int run_sweep(const CommonFlags& f, const std::string& axis, const std::vector<double>& values,
              const std::string& out, const std::string& plot_out) {
  const semuav::ScenarioConfig cfg = load(f);
  semuav::SweepSpec sweep_spec;
  if (values.empty()) {
    sweep_spec = semuav::default_sweep(axis, cfg.schemes);
  } else {
    sweep_spec.axis = axis;
    sweep_spec.values = values;
    sweep_spec.schemes = cfg.schemes;
  }
  const std::vector<semuav::ResultRecord> records = semuav::run_sweep(cfg, sweep_spec, f.workers);
  if (out.empty() || out == "-") {
    semuav::write_csv(records, std::cout);
  } else {
    semuav::emit_csv(records, out);
  }
  if (!plot_out.empty()) semuav::emit_plot_data(records, plot_out);
  for (const semuav::ResultRecord& r : records) {
    if (r.solution.feasible) return 0;
  }
  std::cerr << "semuav: no sweep point is feasible\n";
  return kExitInfeasible;
}

int run_verify(std::uint64_t seed, bool quick, unsigned workers) {
  std::vector<semuav::CheckReport> reports;
  reports.push_back(semuav::check_lambert(seed));
  reports.push_back(semuav::check_placement(seed + 1, quick ? 50 : 500));
  reports.push_back(semuav::check_compression(seed + 2, quick ? 50 : 500));
  reports.push_back(
      semuav::check_global(seed + 3, quick ? 5 : 100, quick ? 40 : 100, {}, workers));
  bool ok = true;
  for (const semuav::CheckReport& r : reports) {
    std::printf("%-12s %s  %6.2fs  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    ok &= r.passed;
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-optimal UAV placement, compression and offloading"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "solve one scenario and print the solution");
  add_common(solve, solve_flags);
  solve->add_option("--schemes", solve_flags.schemes, "schemes to run (default: proposed)")
      ->delimiter(',');

  CommonFlags sweep_flags;
  std::string axis = "B_B";
  std::vector<double> values;
  std::string out;
  std::string plot_out;
  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter across schemes to CSV");
  add_common(sweep, sweep_flags);
  sweep->add_option("--schemes", sweep_flags.schemes, "schemes to run (default: all)")
      ->delimiter(',');
  std::string axis_help = "parameter to sweep, SI units; one of:";
  for (const std::string& a : semuav::sweep_axes()) axis_help += " " + a;
  sweep->add_option("--axis", axis, axis_help)->capture_default_str();
  sweep->add_option("--values", values,
                    "comma-separated increasing values (default range for B_B, D, T_th)")
      ->delimiter(',');
  sweep->add_option("--out", out, "CSV output path ('-' or omitted: stdout)");
  sweep->add_option("--plot-out", plot_out, "plot-data output path, one column per scheme");

  std::uint64_t seed = 20260101;
  bool quick = false;
  unsigned verify_workers = 1;
  CLI::App* verify = app.add_subcommand("verify", "run the randomized oracle suites");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_flag("--quick", quick, "smaller instance counts");
  verify->add_option("--workers", verify_workers, "worker threads")->check(CLI::Range(1, 1024));

  CLI::App* defaults = app.add_subcommand("defaults", "print the default config as YAML");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*solve) return run_solve(solve_flags);
    if (*sweep) return run_sweep(sweep_flags, axis, values, out, plot_out);
    if (*verify) return run_verify(seed, quick, verify_workers);
    if (*defaults) {
      std::cout << semuav::emit_config(semuav::ScenarioConfig{});
      return 0;
    }
  } catch (const semuav::ConfigError& e) {
    std::cerr << "semuav: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const semuav::InfeasibleError& e) {
    std::cerr << "semuav: infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "semuav: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
