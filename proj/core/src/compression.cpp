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

#include "semuav/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "semuav/numerics.hpp"

namespace semuav {

std::string_view to_string(RhoClamp clamp) {
  switch (clamp) {
    case RhoClamp::kInterior: return "interior";
    case RhoClamp::kRhoMin: return "rho_min";
    case RhoClamp::kLatencyLow: return "latency_low";
    case RhoClamp::kLatencyHigh: return "latency_high";
    case RhoClamp::kOne: return "one";
    case RhoClamp::kPinned: return "pinned";
    case RhoClamp::kGridScan: return "grid_scan";
  }
  return "unknown";
}

double compute_energy_coefficient(const SystemParams& p) {
  return p.data_bits *
         (p.capacitance_uav * p.compress_cycles_per_bit * p.cpu_uav_hz * p.cpu_uav_hz +
          p.capacitance_bs * p.recover_cycles_per_bit * p.cpu_bs_hz * p.cpu_bs_hz);
}

double compute_latency_coefficient(const SystemParams& p) {
  return -p.data_bits *
         (p.compress_cycles_per_bit / p.cpu_uav_hz + p.recover_cycles_per_bit / p.cpu_bs_hz);
}

RhoCoefficients rho_coefficients(const SystemParams& params, const Position3D& uav, Offload offload,
                                 double p_uav, double p_bs) {
  const double rate_uplink =
      shannon_rate(params.bw_uav_hz, p_uav, channel_gain_uav_bs(params, uav), params.noise_psd);
  RhoCoefficients c;
  c.tx_latency_slope = rate_uplink > 0.0 ? params.data_bits / rate_uplink
                                         : std::numeric_limits<double>::infinity();
  c.tx_energy_slope = p_uav * c.tx_latency_slope;
  c.compute_energy_log = compute_energy_coefficient(params);
  c.compute_latency_log = compute_latency_coefficient(params);

  double command_stage;
  if (offload == Offload::kBaseStation) {
    command_stage = params.inference_cycles_per_bit * params.data_bits / params.cpu_bs_hz;
  } else {
    const double rate_offload =
        shannon_rate(params.bw_bs_hz, p_bs, params.gain_bs_server, params.noise_psd);
    command_stage = rate_offload > 0.0 ? params.data_bits / rate_offload
                                       : std::numeric_limits<double>::infinity();
  }
  c.latency_residual = params.latency_budget - command_stage;
  return c;
}

double rho_objective(const RhoCoefficients& c, double rho) {
  return c.tx_energy_slope * rho - c.compute_energy_log * std::log(rho);
}

double rho_latency(const RhoCoefficients& c, double rho) {
  return c.tx_latency_slope * rho + c.compute_latency_log * std::log(rho);
}

RhoSolution optimal_rho(const RhoCoefficients& c, double rho_min) {
  RhoSolution s;
  s.rho_unconstrained = c.compute_energy_log / c.tx_energy_slope;
  const double k1 = c.tx_latency_slope;
  const double k2 = c.compute_latency_log;
  const double t = c.latency_residual;
  if (!(t > 0.0) || !std::isfinite(k1) || !(k1 > 0.0) || !(k2 < 0.0)) return s;

  // log(-z), kept in log space so that tiny |z| does not underflow.
  const double log_neg_z = std::log(k1 / -k2) + t / k2;
  const double z = -std::exp(log_neg_z);
  if (z < BranchPoint::min_argument - kBranchClampWidth) return s;

  double w_principal;
  double w_secondary;
  if (z <= BranchPoint::min_argument) {
    // Tangent case: the two roots coincide.
    w_principal = -1.0;
    w_secondary = -1.0;
  } else {
    w_principal = lambert_w0(z);
    w_secondary = lambert_wm1_from_log(log_neg_z);
  }
  const double ratio = k2 / k1;
  const double root_low = ratio * w_principal;
  const double root_high = ratio * w_secondary;
  if (!(root_low <= root_high)) {
    std::ostringstream os;
    os.precision(17);
    os << "optimal_rho: latency roots out of order (" << root_low << " > " << root_high << ")";
    throw std::logic_error(os.str());
  }
  s.root_low = root_low;
  s.root_high = root_high;

  double lower = s.rho_unconstrained;
  s.clamp = RhoClamp::kInterior;
  if (rho_min > lower) {
    lower = rho_min;
    s.clamp = RhoClamp::kRhoMin;
  }
  if (root_low > lower) {
    lower = root_low;
    s.clamp = RhoClamp::kLatencyLow;
  }
  double rho = lower;
  if (1.0 < rho) {
    rho = 1.0;
    s.clamp = RhoClamp::kOne;
  }
  if (root_high < rho) {
    rho = root_high;
    s.clamp = RhoClamp::kLatencyHigh;
  }
  s.rho_star = rho;

  // The projection can land outside the feasible set when
  // [root_low, root_high] and [rho_min, 1] do not intersect.
  s.feasible = rho >= rho_min && rho <= 1.0 && rho_latency(c, rho) <= t + kSlackTolerance;
  return s;
}

RhoSolution rho_oracle(const RhoCoefficients& c, double rho_min, std::size_t n_points) {
  if (n_points < 2) throw ModelError("rho_oracle: need at least two points");
  RhoSolution s;
  s.rho_unconstrained = c.compute_energy_log / c.tx_energy_slope;
  s.clamp = RhoClamp::kGridScan;
  const double log_lo = std::log(rho_min);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_points; ++i) {
    double rho;
    if (i == 0) {
      rho = rho_min;
    } else if (i + 1 == n_points) {
      rho = 1.0;
    } else {
      const double frac = static_cast<double>(i) / static_cast<double>(n_points - 1);
      rho = std::exp(log_lo * (1.0 - frac));
    }
    if (!(rho_latency(c, rho) <= c.latency_residual)) continue;
    const double obj = rho_objective(c, rho);
    if (obj < best) {
      best = obj;
      s.rho_star = rho;
      s.feasible = true;
    }
  }
  return s;
}

}  // namespace semuav
