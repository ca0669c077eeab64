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

#include "semuav/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace semuav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BcdState {
  bool feasible = false;
  double p_uav = 0.0;
  double p_bs = 0.0;
  double rho = 1.0;
  double energy = kInf;
  RhoClamp clamp = RhoClamp::kInterior;
  int iterations = 0;
  std::vector<double> trace;
};

double energy_at(const SystemParams& params, const Position3D& uav, Offload offload, double p_uav,
                 double p_bs, double rho, bool* latency_ok) {
  const RhoCoefficients c = rho_coefficients(params, uav, offload, p_uav, p_bs);
  *latency_ok = std::isfinite(c.tx_latency_slope) && c.latency_residual > 0.0 &&
                rho_latency(c, rho) <= c.latency_residual + kSlackTolerance;
  const double command = offload == Offload::kBaseStation
                             ? params.capacitance_bs * params.cpu_bs_hz * params.cpu_bs_hz *
                                   params.inference_cycles_per_bit * params.data_bits
                             : p_bs * (params.latency_budget - c.latency_residual);
  return rho_objective(c, rho) + command;
}

BcdState bcd_case(const SystemParams& params, const Position3D& uav, Offload offload,
                  const GridSpec& grid, const BcdOptions& options) {
  BcdState s;
  s.p_uav = params.p_uav_max;
  s.p_bs = params.p_bs_max;
  const bool tune_bs = offload == Offload::kServer;
  const std::vector<double> axis_u = power_axis(params.p_uav_max, grid.n_pu, grid);
  const std::vector<double> axis_b =
      tune_bs ? power_axis(params.p_bs_max, grid.n_pb, grid) : std::vector<double>{};

  // Initial rho step at full power. Full power is the fastest configuration,
  // so if it misses the deadline every configuration does.
  {
    const RhoSolution r =
        optimal_rho(rho_coefficients(params, uav, offload, s.p_uav, s.p_bs), params.rho_min);
    if (!r.feasible) return s;
    s.rho = r.rho_star;
    s.clamp = r.clamp;
    bool ok = false;
    s.energy = energy_at(params, uav, offload, s.p_uav, s.p_bs, s.rho, &ok);
    if (!ok) return s;
  }
  s.feasible = true;

  double previous = kInf;
  for (int it = 1; it <= options.max_iters; ++it) {
    if (it > 1) {
      const RhoSolution r =
          optimal_rho(rho_coefficients(params, uav, offload, s.p_uav, s.p_bs), params.rho_min);
      if (r.feasible) {
        bool ok = false;
        const double e = energy_at(params, uav, offload, s.p_uav, s.p_bs, r.rho_star, &ok);
        if (ok && e < s.energy) {
          s.rho = r.rho_star;
          s.clamp = r.clamp;
          s.energy = e;
        }
      }
    }
    // Power block, one coordinate at a time, incumbent kept unless beaten.
    for (double p : axis_u) {
      bool ok = false;
      const double e = energy_at(params, uav, offload, p, s.p_bs, s.rho, &ok);
      if (ok && e < s.energy) {
        s.energy = e;
        s.p_uav = p;
      }
    }
    for (double p : axis_b) {
      bool ok = false;
      const double e = energy_at(params, uav, offload, s.p_uav, p, s.rho, &ok);
      if (ok && e < s.energy) {
        s.energy = e;
        s.p_bs = p;
      }
    }
    s.iterations = it;
    s.trace.push_back(s.energy);
    if (previous - s.energy <= options.tol * std::abs(s.energy)) break;
    previous = s.energy;
  }
  return s;
}

}  // namespace

void BcdOptions::validate() const {
  if (max_iters < 1) throw ConfigError("bcd: max_iters must be at least 1");
  if (!(tol >= 0.0)) throw ConfigError("bcd: tol must be non-negative");
}

Solution run_bcd(const SystemParams& params, const GridSpec& grid, const BcdOptions& options) {
  params.validate();
  grid.validate();
  options.validate();

  Solution sol;
  sol.scheme = Scheme::kBcd;
  sol.v_server = kInf;
  sol.v_bs = kInf;
  try {
    sol.placement = optimal_uav_location(params);
  } catch (const InfeasibleError&) {
    return sol;
  }

  std::array<BcdState, 2> states;
  for (Offload offload : {Offload::kServer, Offload::kBaseStation}) {
    const int a = indicator(offload);
    states[a] = bcd_case(params, sol.placement.uav, offload, grid, options);
    if (!states[a].feasible) continue;
    const Decision d{offload, sol.placement.uav, states[a].rho, states[a].p_uav, states[a].p_bs};
    const FeasibilityReport report = is_feasible(params, d);
    if (!report.feasible()) {
      throw std::logic_error("bcd returned a decision violating: " + report.violations());
    }
    sol.case_decisions[a] = d;
    (offload == Offload::kServer ? sol.v_server : sol.v_bs) = evaluate(params, d).e_total;
  }
  if (!std::isfinite(sol.v_server) && !std::isfinite(sol.v_bs)) return sol;

  const int a = indicator(offload_decision(sol.v_server, sol.v_bs));
  sol.feasible = true;
  sol.decision = *sol.case_decisions[a];
  sol.metrics = evaluate(params, sol.decision);
  sol.rho_clamp = states[a].clamp;
  sol.bcd_iterations = states[a].iterations;
  sol.bcd_trace = states[a].trace;
  return sol;
}

Solution run_scheme(const SystemParams& params, Scheme scheme, const GridSpec& grid,
                    const BcdOptions& bcd, unsigned workers) {
  if (scheme == Scheme::kBcd) return run_bcd(params, grid, bcd);

  SolveOptions options;
  options.workers = workers;
  switch (scheme) {
    case Scheme::kProposed:
      break;
    case Scheme::kGenerateAtServer:
      options.only_offload = Offload::kServer;
      break;
    case Scheme::kGenerateAtBs:
      options.only_offload = Offload::kBaseStation;
      break;
    case Scheme::kNonSemantic:
      options.pins.rho = 1.0;
      break;
    case Scheme::kMaxPower:
      options.pins.p_uav = params.p_uav_max;
      options.pins.p_bs = params.p_bs_max;
      break;
    case Scheme::kFixedUavLocation:
      options.uav = Position3D{params.target.x, params.target.y, params.h_min};
      break;
    case Scheme::kBcd:
      break;
  }
  Solution sol = solve_with(params, grid, options);
  sol.scheme = scheme;
  return sol;
}

}  // namespace semuav
