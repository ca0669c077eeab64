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

// Per-cycle latency and energy model of the UAV -> base station -> cloud
// pipeline. Everything here is SI: bits, Hz, W, W/Hz, s, J, m. Logarithmic
// units (dBm, dB) are converted only at the configuration boundary.

#pragma once

#include <cstdint>
#include <string>

#include "semuav/errors.hpp"

namespace semuav {

struct Position3D {
  double x = 0.0;  // m
  double y = 0.0;  // m
  double h = 0.0;  // altitude, m

  friend bool operator==(const Position3D&, const Position3D&) = default;
};

/// Where the AI inference that produces the control command runs.
/// The numeric values are the offload indicator used in the energy sum.
enum class Offload : std::uint8_t {
  kServer = 0,
  kBaseStation = 1,
};

constexpr int indicator(Offload a) { return static_cast<int>(a); }

/// Physical and model constants. Immutable after validation.
///
/// Defaults: the target position, altitude window, power caps, BS-server
/// bandwidth, data size and latency budget follow the reference scenario.
/// The remaining constants are not published with it; the values below are
/// our own calibration, chosen so that compression, placement, power control
/// and offloading all trade off against each other at the default point.
struct SystemParams {
  Position3D target{300.0, 100.0, 0.0};

  double sensing_decay = 0.01;  // 1/m
  double qos_min = 0.05;        // minimum sensing quality, in (0, 1)

  double data_bits = 1e6;
  double rho_min = 0.05;  // smallest admissible compression ratio

  double compress_cycles_per_bit = 50.0;
  double recover_cycles_per_bit = 5.0;
  double inference_cycles_per_bit = 300.0;

  double cpu_uav_hz = 1e9;
  double cpu_bs_hz = 3e9;
  double capacitance_uav = 1e-28;  // J s^2 / cycle^3
  double capacitance_bs = 1e-28;

  double ref_gain = 1e-9;  // UAV-BS channel gain at 1 m (-90 dB)
  double pathloss_exp = 2.0;
  double bw_uav_hz = 0.5e6;
  double bw_bs_hz = 0.5e6;
  double noise_psd = 3.9810717055349858e-21;  // -174 dBm/Hz
  double gain_bs_server = 1.9952623149688828e-13;  // -127 dB

  double p_uav_max = 1.0;  // 30 dBm
  double p_bs_max = 1.0;

  double h_min = 40.0;
  double h_max = 400.0;

  double latency_budget = 0.7;  // s

  /// Throws ConfigError naming the first field that breaks an invariant,
  /// including the placement precondition h_min <= max sensing distance.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// One candidate configuration.
struct Decision {
  Offload offload = Offload::kServer;
  Position3D uav;
  double rho = 1.0;
  double p_uav = 0.0;  // W
  double p_bs = 0.0;   // W

  friend bool operator==(const Decision&, const Decision&) = default;
};

/// Stage-by-stage latency (s) and energy (J) of one update cycle.
struct StageMetrics {
  double t_compress = 0.0;  // on-board semantic compression
  double t_uplink = 0.0;    // UAV -> BS transmission
  double t_recover = 0.0;   // semantic recovery at the BS
  double t_infer = 0.0;     // inference at the BS
  double t_offload = 0.0;   // BS -> server transmission

  double e_compress = 0.0;
  double e_uplink = 0.0;
  double e_recover = 0.0;
  double e_infer = 0.0;
  double e_offload = 0.0;

  double e_total = 0.0;
  double t_total = 0.0;
  double qos = 0.0;
  double slack_latency = 0.0;  // latency_budget - t_total
  double slack_qos = 0.0;      // qos - qos_min
};

/// Per-constraint outcome of a feasibility check.
struct FeasibilityReport {
  bool latency = false;
  bool qos = false;
  bool altitude = false;
  bool rho_bounds = false;
  bool p_uav_bounds = false;
  bool p_bs_bounds = false;
  bool binary_offload = false;
  double slack_latency = 0.0;
  double slack_qos = 0.0;

  bool feasible() const {
    return latency && qos && altitude && rho_bounds && p_uav_bounds && p_bs_bounds &&
           binary_offload;
  }
  /// Comma-separated names of the violated constraints, empty when feasible.
  std::string violations() const;
};

/// Default absolute tolerance on the latency (s) and QoS slacks.
inline constexpr double kSlackTolerance = 1e-9;

double distance_uav_bs(const Position3D& uav);
double distance_uav_target(const SystemParams& params, const Position3D& uav);
double sensing_qos(const SystemParams& params, const Position3D& uav);

/// G0 / d^alpha. Throws ModelError when the UAV sits exactly on the BS.
double channel_gain_uav_bs(const SystemParams& params, const Position3D& uav);

/// Shannon rate in bit/s, base-2. Returns 0 when the SNR underflows.
double shannon_rate(double bandwidth_hz, double power_w, double gain, double noise_psd);

/// Full latency/energy breakdown. Throws ModelError if the decision cannot be
/// evaluated at all (rho outside (0, 1], non-positive power, unknown offload
/// value, non-finite position). Bounds against `params` are not checked here;
/// that is is_feasible's job. A link whose rate underflows reports +inf latency.
StageMetrics evaluate(const SystemParams& params, const Decision& decision);

/// Checks every constraint of the joint problem. Never throws.
FeasibilityReport is_feasible(const SystemParams& params, const Decision& decision,
                              double slack_tol = kSlackTolerance);

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double dbm_per_hz_to_watt_per_hz(double dbm_per_hz);
double watt_per_hz_to_dbm_per_hz(double watt_per_hz);
double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace semuav
