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

#include "semuav/power_search.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "semuav/parallel.hpp"

namespace semuav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  double energy = kInf;
  double p_uav = kInf;
  double p_bs = kInf;
  double rho = 1.0;
  RhoClamp clamp = RhoClamp::kInterior;
};

// Strict total order: lower energy, then lexicographically smaller powers.
bool better(const Candidate& a, const Candidate& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  if (a.p_uav != b.p_uav) return a.p_uav < b.p_uav;
  return a.p_bs < b.p_bs;
}

// Maps the axis domain to the search coordinate (log or linear) and back.
struct AxisMap {
  Spacing spacing;
  double to(double p) const { return spacing == Spacing::kLog ? std::log(p) : p; }
  double from(double u) const { return spacing == Spacing::kLog ? std::exp(u) : u; }
};

// n points on [lo, hi] in search coordinates; endpoints that coincide with the
// axis bounds are emitted exactly.
std::vector<double> fill_axis(const AxisMap& map, double lo, double hi, std::size_t n,
                              double p_floor, double p_max, bool lo_is_floor, bool hi_is_max) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = map.from(lo + (hi - lo) * frac);
  }
  if (lo_is_floor) out.front() = p_floor;
  if (hi_is_max) out.back() = p_max;
  return out;
}

std::vector<double> window_axis(double center, int round, double p_max, std::size_t n,
                                const GridSpec& grid) {
  const AxisMap map{grid.spacing};
  const double p_floor = p_max * grid.floor_ratio;
  const double lo_all = map.to(p_floor);
  const double hi_all = map.to(p_max);
  const double width = (hi_all - lo_all) / std::pow(grid.refine_shrink, round);
  double lo = map.to(center) - 0.5 * width;
  double hi = lo + width;
  bool lo_is_floor = false;
  bool hi_is_max = false;
  if (lo <= lo_all) {
    lo = lo_all;
    hi = lo + width;
    lo_is_floor = true;
  }
  if (hi >= hi_all) {
    hi = hi_all;
    lo = std::max(lo_all, hi - width);
    hi_is_max = true;
    lo_is_floor = lo == lo_all;
  }
  return fill_axis(map, lo, hi, n, p_floor, p_max, lo_is_floor, hi_is_max);
}

// Everything about one offload case that does not depend on the powers.
struct CaseModel {
  const SystemParams* params;
  Offload offload;
  double uplink_gain;
  double energy_log;   // compute energy coefficient
  double latency_log;  // compute latency coefficient
  double infer_time;
  double infer_energy;
  std::optional<double> pinned_rho;

  double uplink_time(double p_uav) const {
    const double rate = shannon_rate(params->bw_uav_hz, p_uav, uplink_gain, params->noise_psd);
    return rate > 0.0 ? params->data_bits / rate : kInf;
  }

  // Command-generation stage: (time, energy).
  std::pair<double, double> command_stage(double p_bs) const {
    if (offload == Offload::kBaseStation) return {infer_time, infer_energy};
    const double rate =
        shannon_rate(params->bw_bs_hz, p_bs, params->gain_bs_server, params->noise_psd);
    const double t = rate > 0.0 ? params->data_bits / rate : kInf;
    return {t, p_bs * t};
  }
};

struct UplinkTerms {
  double latency_slope;
  double energy_slope;
};

struct CommandTerms {
  double residual;
  double energy;
};

// Fills `out` with the point's energy; returns false when infeasible.
bool evaluate_point(const CaseModel& m, const UplinkTerms& u, const CommandTerms& c, double p_uav,
                    double p_bs, Candidate& out) {
  if (!std::isfinite(u.latency_slope) || !std::isfinite(c.energy)) return false;
  const RhoCoefficients coeffs{u.energy_slope, m.energy_log, u.latency_slope, m.latency_log,
                               c.residual};
  double rho;
  RhoClamp clamp;
  if (m.pinned_rho) {
    rho = *m.pinned_rho;
    clamp = RhoClamp::kPinned;
    if (!(rho >= m.params->rho_min && rho <= 1.0)) return false;
    if (!(rho_latency(coeffs, rho) <= c.residual + kSlackTolerance)) return false;
  } else {
    const RhoSolution s = optimal_rho(coeffs, m.params->rho_min);
    if (!s.feasible) return false;
    rho = s.rho_star;
    clamp = s.clamp;
  }
  out.energy = rho_objective(coeffs, rho) + c.energy;
  out.p_uav = p_uav;
  out.p_bs = p_bs;
  out.rho = rho;
  out.clamp = clamp;
  return true;
}

void scan(const CaseModel& m, const std::vector<double>& axis_u, const std::vector<double>& axis_b,
          unsigned workers, Candidate& best, GridStats& stats) {
  std::vector<UplinkTerms> uplink(axis_u.size());
  for (std::size_t i = 0; i < axis_u.size(); ++i) {
    const double t = m.uplink_time(axis_u[i]);
    uplink[i] = {t, axis_u[i] * t};
  }
  std::vector<CommandTerms> command(axis_b.size());
  for (std::size_t j = 0; j < axis_b.size(); ++j) {
    const auto [t, e] = m.command_stage(axis_b[j]);
    command[j] = {m.params->latency_budget - t, e};
  }

  std::vector<Candidate> row_best(axis_u.size());
  std::vector<std::size_t> row_feasible(axis_u.size(), 0);
  parallel_for(axis_u.size(), workers, [&](std::size_t i) {
    Candidate local;
    std::size_t count = 0;
    for (std::size_t j = 0; j < axis_b.size(); ++j) {
      Candidate c;
      if (!evaluate_point(m, uplink[i], command[j], axis_u[i], axis_b[j], c)) continue;
      ++count;
      if (better(c, local)) local = c;
    }
    row_best[i] = local;
    row_feasible[i] = count;
  });
  for (std::size_t i = 0; i < axis_u.size(); ++i) {
    stats.feasible += row_feasible[i];
    if (better(row_best[i], best)) best = row_best[i];
  }
  stats.evaluated += axis_u.size() * axis_b.size();
}

void check_pinned_power(double value, double max, const char* name) {
  if (!(value > 0.0 && value <= max)) {
    std::ostringstream os;
    os << "pinned " << name << " = " << value << " W outside (0, " << max << "]";
    throw ConfigError(os.str());
  }
}

}  // namespace

void GridSpec::validate() const {
  if (n_pu < 2 || n_pb < 2) throw ConfigError("grid: n_pu and n_pb must be at least 2");
  if (!(floor_ratio > 0.0 && floor_ratio < 1.0)) {
    throw ConfigError("grid: floor_ratio must lie in (0, 1)");
  }
  if (refine_rounds < 0) throw ConfigError("grid: refine_rounds must be non-negative");
  if (!(refine_shrink > 1.0)) throw ConfigError("grid: refine_shrink must exceed 1");
}

std::vector<double> power_axis(double p_max, std::size_t n, const GridSpec& grid) {
  const AxisMap map{grid.spacing};
  const double p_floor = p_max * grid.floor_ratio;
  return fill_axis(map, map.to(p_floor), map.to(p_max), n, p_floor, p_max, true, true);
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kProposed: return "proposed";
    case Scheme::kGenerateAtServer: return "generate_at_server";
    case Scheme::kGenerateAtBs: return "generate_at_bs";
    case Scheme::kNonSemantic: return "non_semantic";
    case Scheme::kMaxPower: return "max_power";
    case Scheme::kFixedUavLocation: return "fixed_uav_location";
    case Scheme::kBcd: return "bcd";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

CaseResult solve_for_offload(const SystemParams& params, const Position3D& uav, Offload offload,
                             const GridSpec& grid, const SearchPins& pins, unsigned workers) {
  grid.validate();
  if (pins.p_uav) check_pinned_power(*pins.p_uav, params.p_uav_max, "p_uav");
  if (pins.p_bs) check_pinned_power(*pins.p_bs, params.p_bs_max, "p_bs");

  const double power_bs_cpu =
      params.capacitance_bs * params.cpu_bs_hz * params.cpu_bs_hz * params.cpu_bs_hz;
  CaseModel m{&params,
              offload,
              channel_gain_uav_bs(params, uav),
              compute_energy_coefficient(params),
              compute_latency_coefficient(params),
              params.inference_cycles_per_bit * params.data_bits / params.cpu_bs_hz,
              0.0,
              pins.rho};
  m.infer_energy = power_bs_cpu * m.infer_time;

  const bool u_fixed = pins.p_uav.has_value();
  // The BS-server link is idle when inference runs at the base station.
  const bool b_fixed = pins.p_bs.has_value() || offload == Offload::kBaseStation;
  const double b_fixed_value = pins.p_bs.value_or(params.p_bs_max);

  std::vector<double> axis_u =
      u_fixed ? std::vector<double>{*pins.p_uav} : power_axis(params.p_uav_max, grid.n_pu, grid);
  std::vector<double> axis_b =
      b_fixed ? std::vector<double>{b_fixed_value} : power_axis(params.p_bs_max, grid.n_pb, grid);

  CaseResult result;
  Candidate best;
  scan(m, axis_u, axis_b, workers, best, result.stats);
  if (std::isfinite(best.energy) && !(u_fixed && b_fixed)) {
    for (int round = 1; round <= grid.refine_rounds; ++round) {
      if (!u_fixed) axis_u = window_axis(best.p_uav, round, params.p_uav_max, grid.n_pu, grid);
      if (!b_fixed) axis_b = window_axis(best.p_bs, round, params.p_bs_max, grid.n_pb, grid);
      scan(m, axis_u, axis_b, workers, best, result.stats);
    }
  }
  if (!std::isfinite(best.energy)) return result;
  result.feasible = true;
  result.p_uav = best.p_uav;
  result.p_bs = best.p_bs;
  result.rho = best.rho;
  result.energy = best.energy;
  result.clamp = best.clamp;
  return result;
}

Offload offload_decision(double v_server, double v_bs) {
  const bool server_ok = std::isfinite(v_server);
  const bool bs_ok = std::isfinite(v_bs);
  if (!server_ok && !bs_ok) throw InfeasibleError("both offload choices are infeasible");
  if (!bs_ok) return Offload::kServer;
  if (!server_ok) return Offload::kBaseStation;
  return v_server < v_bs ? Offload::kServer : Offload::kBaseStation;
}

Solution solve_with(const SystemParams& params, const GridSpec& grid, const SolveOptions& options) {
  params.validate();
  grid.validate();

  Solution sol;
  sol.v_server = kInf;
  sol.v_bs = kInf;
  if (options.uav) {
    sol.placement = pinned_location(params, *options.uav);
  } else {
    try {
      sol.placement = optimal_uav_location(params);
    } catch (const InfeasibleError&) {
      return sol;
    }
  }

  std::array<CaseResult, 2> cases;
  for (Offload offload : {Offload::kServer, Offload::kBaseStation}) {
    if (options.only_offload && *options.only_offload != offload) continue;
    const int a = indicator(offload);
    cases[a] = solve_for_offload(params, sol.placement.uav, offload, grid, options.pins,
                                 options.workers);
    sol.stats.evaluated += cases[a].stats.evaluated;
    sol.stats.feasible += cases[a].stats.feasible;
    if (!cases[a].feasible) continue;

    const Decision d{offload, sol.placement.uav, cases[a].rho, cases[a].p_uav, cases[a].p_bs};
    const FeasibilityReport report = is_feasible(params, d);
    if (!report.feasible()) {
      throw std::logic_error("grid search returned a decision violating: " + report.violations());
    }
    sol.case_decisions[a] = d;
    (offload == Offload::kServer ? sol.v_server : sol.v_bs) = evaluate(params, d).e_total;
  }

  if (!std::isfinite(sol.v_server) && !std::isfinite(sol.v_bs)) return sol;
  const Offload best = offload_decision(sol.v_server, sol.v_bs);
  const int a = indicator(best);
  sol.feasible = true;
  sol.decision = *sol.case_decisions[a];
  sol.metrics = evaluate(params, sol.decision);
  sol.rho_clamp = cases[a].clamp;
  return sol;
}

Solution solve(const SystemParams& params, const GridSpec& grid, unsigned workers) {
  SolveOptions options;
  options.workers = workers;
  Solution sol = solve_with(params, grid, options);
  if (!sol.feasible) {
    throw InfeasibleError("no feasible configuration: both offload choices violate the latency "
                          "budget on the whole power grid");
  }
  return sol;
}

}  // namespace semuav
