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

#include "semuav/system_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace semuav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* field, const char* what) {
  if (!ok) {
    std::ostringstream os;
    os << "invalid parameter '" << field << "': " << what;
    throw ConfigError(os.str());
  }
}

bool finite_position(const Position3D& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.h);
}

}  // namespace

void SystemParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  require(std::isfinite(target.x) && std::isfinite(target.y), "target", "must be finite");
  require(target.h == 0.0, "target.h", "target altitude must be zero");
  require(positive(sensing_decay), "sensing_decay", "must be positive");
  require(qos_min > 0.0 && qos_min < 1.0, "qos_min", "must lie in (0, 1)");
  require(positive(data_bits), "data_bits", "must be positive");
  require(rho_min > 0.0 && rho_min <= 1.0, "rho_min", "must lie in (0, 1]");
  require(positive(compress_cycles_per_bit), "compress_cycles_per_bit", "must be positive");
  require(positive(recover_cycles_per_bit), "recover_cycles_per_bit", "must be positive");
  require(positive(inference_cycles_per_bit), "inference_cycles_per_bit", "must be positive");
  require(positive(cpu_uav_hz), "cpu_uav_hz", "must be positive");
  require(positive(cpu_bs_hz), "cpu_bs_hz", "must be positive");
  require(positive(capacitance_uav), "capacitance_uav", "must be positive");
  require(positive(capacitance_bs), "capacitance_bs", "must be positive");
  require(positive(ref_gain), "ref_gain", "must be positive");
  require(std::isfinite(pathloss_exp) && pathloss_exp >= 1.0, "pathloss_exp", "must be >= 1");
  require(positive(bw_uav_hz), "bw_uav_hz", "must be positive");
  require(positive(bw_bs_hz), "bw_bs_hz", "must be positive");
  require(positive(noise_psd), "noise_psd", "must be positive");
  require(positive(gain_bs_server), "gain_bs_server", "must be positive");
  require(positive(p_uav_max), "p_uav_max", "must be positive");
  require(positive(p_bs_max), "p_bs_max", "must be positive");
  require(positive(h_min), "h_min", "must be positive");
  require(positive(h_max), "h_max", "must be positive");
  require(h_min <= h_max, "h_min", "must not exceed h_max");
  require(positive(latency_budget), "latency_budget", "must be positive");
  const double d_max = -std::log(qos_min) / sensing_decay;
  require(h_min <= d_max, "h_min",
          "exceeds the maximum sensing distance -ln(qos_min)/sensing_decay; no altitude "
          "satisfies the QoS constraint");
}

std::string FeasibilityReport::violations() const {
  std::vector<const char*> bad;
  if (!latency) bad.push_back("latency");
  if (!qos) bad.push_back("qos");
  if (!altitude) bad.push_back("altitude");
  if (!rho_bounds) bad.push_back("rho_bounds");
  if (!p_uav_bounds) bad.push_back("p_uav_bounds");
  if (!p_bs_bounds) bad.push_back("p_bs_bounds");
  if (!binary_offload) bad.push_back("binary_offload");
  std::string out;
  for (const char* name : bad) {
    if (!out.empty()) out += ",";
    out += name;
  }
  return out;
}

double distance_uav_bs(const Position3D& uav) { return std::hypot(uav.x, uav.y, uav.h); }

double distance_uav_target(const SystemParams& params, const Position3D& uav) {
  return std::hypot(uav.x - params.target.x, uav.y - params.target.y, uav.h);
}

double sensing_qos(const SystemParams& params, const Position3D& uav) {
  return std::exp(-params.sensing_decay * distance_uav_target(params, uav));
}

double channel_gain_uav_bs(const SystemParams& params, const Position3D& uav) {
  const double d = distance_uav_bs(uav);
  if (!(d > 0.0)) throw ModelError("channel_gain_uav_bs: UAV coincides with the base station");
  return params.ref_gain / std::pow(d, params.pathloss_exp);
}

double shannon_rate(double bandwidth_hz, double power_w, double gain, double noise_psd) {
  const double snr = power_w * gain / (bandwidth_hz * noise_psd);
  return bandwidth_hz * std::log1p(snr) / std::numbers::ln2;
}

StageMetrics evaluate(const SystemParams& params, const Decision& decision) {
  const int a = indicator(decision.offload);
  if (a != 0 && a != 1) throw ModelError("evaluate: offload indicator must be 0 or 1");
  if (!(decision.rho > 0.0 && decision.rho <= 1.0)) {
    throw ModelError("evaluate: compression ratio must lie in (0, 1]");
  }
  if (!(decision.p_uav > 0.0) || !std::isfinite(decision.p_uav) || !(decision.p_bs > 0.0) ||
      !std::isfinite(decision.p_bs)) {
    throw ModelError("evaluate: transmit powers must be positive and finite");
  }
  if (!finite_position(decision.uav) || decision.uav.h < 0.0) {
    throw ModelError("evaluate: UAV position must be finite with non-negative altitude");
  }

  const SystemParams& p = params;
  const double bits = p.data_bits;
  // +0.0 turns ln(1) = -0.0 into a clean zero.
  const double neg_log_rho = -std::log(decision.rho) + 0.0;
  const double power_uav_cpu = p.capacitance_uav * p.cpu_uav_hz * p.cpu_uav_hz * p.cpu_uav_hz;
  const double power_bs_cpu = p.capacitance_bs * p.cpu_bs_hz * p.cpu_bs_hz * p.cpu_bs_hz;

  StageMetrics m;
  m.t_compress = p.compress_cycles_per_bit * bits * neg_log_rho / p.cpu_uav_hz;
  m.e_compress = power_uav_cpu * m.t_compress;

  const double rate_uplink =
      shannon_rate(p.bw_uav_hz, decision.p_uav, channel_gain_uav_bs(p, decision.uav), p.noise_psd);
  m.t_uplink = rate_uplink > 0.0 ? bits * decision.rho / rate_uplink : kInf;
  m.e_uplink = decision.p_uav * m.t_uplink;

  m.t_recover = p.recover_cycles_per_bit * bits * neg_log_rho / p.cpu_bs_hz;
  m.e_recover = power_bs_cpu * m.t_recover;

  m.t_infer = p.inference_cycles_per_bit * bits / p.cpu_bs_hz;
  m.e_infer = power_bs_cpu * m.t_infer;

  const double rate_offload = shannon_rate(p.bw_bs_hz, decision.p_bs, p.gain_bs_server, p.noise_psd);
  m.t_offload = rate_offload > 0.0 ? bits / rate_offload : kInf;
  m.e_offload = decision.p_bs * m.t_offload;

  // Only the selected command-generation stage enters the totals; the other
  // one is still reported for diagnostics.
  const bool at_bs = a == 1;
  m.e_total = m.e_compress + m.e_uplink + m.e_recover + (at_bs ? m.e_infer : m.e_offload);
  m.t_total = m.t_compress + m.t_uplink + m.t_recover + (at_bs ? m.t_infer : m.t_offload);
  m.qos = sensing_qos(p, decision.uav);
  m.slack_latency = p.latency_budget - m.t_total;
  m.slack_qos = m.qos - p.qos_min;
  return m;
}

FeasibilityReport is_feasible(const SystemParams& params, const Decision& decision,
                              double slack_tol) {
  FeasibilityReport r;
  const int a = indicator(decision.offload);
  r.binary_offload = a == 0 || a == 1;
  r.altitude = decision.uav.h >= params.h_min && decision.uav.h <= params.h_max;
  r.rho_bounds = decision.rho >= params.rho_min && decision.rho <= 1.0;
  r.p_uav_bounds = decision.p_uav > 0.0 && decision.p_uav <= params.p_uav_max;
  r.p_bs_bounds = decision.p_bs > 0.0 && decision.p_bs <= params.p_bs_max;
  try {
    const StageMetrics m = evaluate(params, decision);
    r.slack_latency = m.slack_latency;
    r.slack_qos = m.slack_qos;
    r.latency = std::isfinite(m.t_total) && m.slack_latency >= -slack_tol;
    r.qos = m.slack_qos >= -slack_tol;
  } catch (const std::exception&) {
    r.slack_latency = -kInf;
    r.slack_qos = -kInf;
  }
  return r;
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }
double dbm_per_hz_to_watt_per_hz(double dbm_per_hz) { return dbm_to_watt(dbm_per_hz); }
double watt_per_hz_to_dbm_per_hz(double watt_per_hz) { return watt_to_dbm(watt_per_hz); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace semuav
