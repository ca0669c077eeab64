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

// Optimal semantic compression ratio at fixed location, offload choice and
// transmit powers.
//
// With those fixed, the energy that still depends on rho is
//     tx_energy_slope * rho - compute_energy_log * ln(rho)
// and the latency constraint reads
//     tx_latency_slope * rho + compute_latency_log * ln(rho) <= latency_residual.
// The constraint's left side is convex in rho, so its sublevel set is an
// interval [root_low, root_high] whose endpoints are the two real branches of
// the Lambert W function evaluated at
//     z = (tx_latency_slope / compute_latency_log) * exp(latency_residual / compute_latency_log).
// The optimum is the unconstrained minimizer projected onto
// [root_low, root_high] intersected with [rho_min, 1].

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "semuav/system_model.hpp"

namespace semuav {

struct RhoCoefficients {
  double tx_energy_slope = 0.0;      // J, uplink energy of the full payload
  double compute_energy_log = 0.0;   // J, > 0
  double tx_latency_slope = 0.0;     // s, uplink time of the full payload
  double compute_latency_log = 0.0;  // s, < 0
  double latency_residual = 0.0;     // s, budget left after command generation
};

enum class RhoClamp {
  kInterior,      // unconstrained minimizer
  kRhoMin,        // lower bound rho_min
  kLatencyLow,    // smaller latency root
  kLatencyHigh,   // larger latency root
  kOne,           // upper bound 1
  kPinned,        // fixed from outside (baselines)
  kGridScan,      // produced by rho_oracle
};

std::string_view to_string(RhoClamp clamp);

struct RhoSolution {
  double rho_star = 1.0;
  double rho_unconstrained = 0.0;
  std::optional<double> root_low;
  std::optional<double> root_high;
  RhoClamp clamp = RhoClamp::kInterior;
  bool feasible = false;
};

/// Data-size-scaled compute energy coefficient; depends only on the params.
double compute_energy_coefficient(const SystemParams& params);
/// Data-size-scaled compute latency coefficient (negative).
double compute_latency_coefficient(const SystemParams& params);

/// Builds the coefficient bundle for the given location, offload choice and
/// powers. A non-positive latency_residual is returned as is; optimal_rho
/// reports it as infeasible.
RhoCoefficients rho_coefficients(const SystemParams& params, const Position3D& uav, Offload offload,
                                 double p_uav, double p_bs);

/// Objective tx_energy_slope * rho - compute_energy_log * ln(rho).
double rho_objective(const RhoCoefficients& c, double rho);
/// Left side of the latency constraint.
double rho_latency(const RhoCoefficients& c, double rho);

/// Closed-form optimum. Infeasibility is reported through `feasible`, never
/// thrown. Throws std::logic_error if the two latency roots come out of order.
RhoSolution optimal_rho(const RhoCoefficients& c, double rho_min);

/// Brute-force scan over `n_points` log-spaced ratios in [rho_min, 1];
/// ties go to the smallest ratio.
RhoSolution rho_oracle(const RhoCoefficients& c, double rho_min, std::size_t n_points);

}  // namespace semuav
