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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "semuav/baselines.hpp"
#include "semuav/power_search.hpp"
#include "semuav/system_model.hpp"

namespace semuav {

/// A scenario as written in a config file. Powers are in dBm, the noise PSD in
/// dBm/Hz, channel gains in dB; everything else is SI. Fields left out of a
/// file keep the defaults below.
struct ScenarioConfig {
  double target_x_m = 300.0;
  double target_y_m = 100.0;

  double sensing_decay_per_m = 0.01;
  double qos_min = 0.05;

  double data_bits = 1e6;
  double rho_min = 0.05;

  double compress_cycles_per_bit = 50.0;
  double recover_cycles_per_bit = 5.0;
  double inference_cycles_per_bit = 300.0;
  double cpu_uav_hz = 1e9;
  double cpu_bs_hz = 3e9;
  double capacitance_uav = 1e-28;
  double capacitance_bs = 1e-28;

  double ref_gain_db = -90.0;
  double pathloss_exp = 2.0;
  double bw_uav_hz = 0.5e6;
  double bw_bs_hz = 0.5e6;
  double noise_dbm_per_hz = -174.0;
  double gain_bs_server_db = -127.0;

  double p_uav_max_dbm = 30.0;
  double p_bs_max_dbm = 30.0;

  double h_min_m = 40.0;
  double h_max_m = 400.0;

  double latency_budget_s = 0.7;

  GridSpec grid;
  BcdOptions bcd;
  std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};

  /// Converts to SI and validates. Throws ConfigError naming the bad field.
  SystemParams to_params() const;
};

/// Parses YAML text. Unknown keys, malformed values and invariant violations
/// throw ConfigError with the offending key and, where known, line and column.
ScenarioConfig parse_config(std::string_view yaml_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// YAML text that parse_config reads back to an identical ScenarioConfig.
std::string emit_config(const ScenarioConfig& config);

/// Names accepted as sweep axes ("B_B", "D", "T_th", ...). Values are SI.
std::vector<std::string> sweep_axes();
/// Overrides one scalar field. Throws ConfigError for unknown axes.
void set_axis(SystemParams& params, std::string_view axis, double value);
double get_axis(const SystemParams& params, std::string_view axis);

struct SweepSpec {
  std::string axis;
  std::vector<double> values;  // strictly increasing, SI units
  std::vector<Scheme> schemes;

  void validate() const;  // throws ConfigError
};

/// Default ranges: B_B 0.1-2 MHz (11 points), D 0.2-2 Mb (10), T_th 0.3-1.2 s (10).
SweepSpec default_sweep(std::string_view axis, std::vector<Scheme> schemes = {kAllSchemes.begin(),
                                                                             kAllSchemes.end()});

/// n evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct ResultRecord {
  std::string axis;
  double value = 0.0;
  Scheme scheme = Scheme::kProposed;
  Solution solution;
};

/// Every (value, scheme) pair, ordered by value then by the sweep's scheme
/// order. Points whose overridden params are invalid come back infeasible.
/// Output does not depend on `workers`.
std::vector<ResultRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep,
                                    unsigned workers = 1);

/// Column header of the results CSV.
inline constexpr std::string_view kCsvHeader =
    "axis,value,scheme,e_total_J,feasible,a,rho,p_U_W,p_B_W,x_U,y_U,H_U,t_total_s,e_U,e_UB,e_B,"
    "e_BI,e_BS";

/// Shortest decimal text that parses back to exactly `v`.
std::string format_exact(double v);

void write_csv(const std::vector<ResultRecord>& records, std::ostream& out);
void write_plot_data(const std::vector<ResultRecord>& records, std::ostream& out);
/// Throw std::runtime_error on I/O failure.
void emit_csv(const std::vector<ResultRecord>& records, const std::filesystem::path& path);
void emit_plot_data(const std::vector<ResultRecord>& records, const std::filesystem::path& path);

/// Human-readable multi-line summary for the CLI.
std::string describe(const Solution& solution);

}  // namespace semuav
