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

#include "semuav/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "semuav/compression.hpp"
#include "semuav/numerics.hpp"
#include "semuav/parallel.hpp"
#include "semuav/placement.hpp"

namespace semuav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

std::vector<double> log_axis(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

double lambert_residual_ratio(double w, double x) {
  return std::abs(w * std::exp(w) - x) / (1e-12 * std::max(1.0, std::abs(x)));
}

// Latency of the compression pipeline as a function of rho.
double latency(double k1, double k2, double rho) { return k1 * rho + k2 * std::log(rho); }

}  // namespace

CheckReport check_lambert(std::uint64_t seed, std::size_t n) {
  Stopwatch clock;
  CheckReport r;
  r.name = "lambert";
  std::mt19937_64 rng(seed);
  const double branch = BranchPoint::min_argument;
  std::size_t ordering_failures = 0;

  for (std::size_t i = 0; i < n; ++i) {
    double x;
    switch (i % 5) {
      case 0:  // just above the branch point
        x = branch + log_uniform(rng, 1e-15, 1e-2);
        break;
      case 1:  // the whole negative interval
        x = uniform(rng, branch, 0.0);
        break;
      case 2:  // tiny negative arguments, deep on the secondary branch
        x = -log_uniform(rng, 1e-300, 1e-3);
        break;
      case 3:  // moderate positive
        x = uniform(rng, 0.0, 10.0);
        break;
      default:  // large positive
        x = log_uniform(rng, 10.0, 1e300);
        break;
    }
    if (i == 0) x = branch;

    const double w0 = lambert_w0(x);
    double worst = lambert_residual_ratio(w0, x);
    if (x < 0.0) {
      const double wm1 = lambert_wm1(x);
      worst = std::max(worst, lambert_residual_ratio(wm1, x));
      if (!(wm1 <= -1.0 && -1.0 <= w0)) ++ordering_failures;
    }
    if (!(worst <= 1.0)) ++r.failures;
    r.worst = std::max(r.worst, std::isfinite(worst) ? worst : kInf);
    ++r.cases;
  }
  r.failures += ordering_failures;
  r.passed = r.failures == 0;
  std::ostringstream os;
  os << r.cases << " arguments, worst residual/bound " << r.worst << ", ordering violations "
     << ordering_failures;
  r.detail = os.str();
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_placement(std::uint64_t seed, std::size_t n, double step) {
  Stopwatch clock;
  CheckReport r;
  r.name = "placement";
  std::mt19937_64 rng(seed);
  const double bound = step * std::sqrt(3.0);
  std::size_t case_counts[3] = {0, 0, 0};

  for (std::size_t i = 0; i < n; ++i) {
    SystemParams p;
    p.h_min = uniform(rng, 20.0, 80.0);
    p.h_max = p.h_min + uniform(rng, 50.0, 300.0);
    // Horizontal service radius at h_min of at least ten lattice steps.
    const double radius = uniform(rng, 10.0 * step, 300.0);
    const double d_max = std::hypot(radius, p.h_min);
    p.qos_min = uniform(rng, 0.02, 0.5);
    p.sensing_decay = -std::log(p.qos_min) / d_max;
    p.target = {uniform(rng, -150.0, 150.0), uniform(rng, -150.0, 150.0), 0.0};
    p.validate();

    const PlacementResult closed = optimal_uav_location(p);
    ++case_counts[static_cast<int>(closed.case_tag)];
    const Position3D lattice = placement_oracle(p, step);
    const double d_lattice = distance_uav_bs(lattice);
    const double err = std::abs(closed.d_base - d_lattice);
    const bool qos_ok = closed.d_target <= closed.d_max * (1.0 + 1e-12);
    const bool altitude_ok = closed.uav.h >= p.h_min && closed.uav.h <= p.h_max;
    if (!(err <= bound) || d_lattice < closed.d_base - bound || !qos_ok || !altitude_ok) {
      ++r.failures;
    }
    r.worst = std::max(r.worst, err / bound);
    ++r.cases;
  }
  r.passed = r.failures == 0;
  std::ostringstream os;
  os << r.cases << " draws (" << case_counts[1] << " above base, " << case_counts[2]
     << " toward target), step " << step << " m, worst |error|/(step*sqrt3) " << r.worst;
  r.detail = os.str();
  r.seconds = clock.seconds();
  return r;
}

CheckReport check_compression(std::uint64_t seed, std::size_t n, std::size_t scan_points) {
  Stopwatch clock;
  CheckReport r;
  r.name = "compression";
  std::mt19937_64 rng(seed);
  std::map<std::string, std::size_t> clamps;
  std::size_t infeasible = 0;
  double worst_root = 0.0;
  double worst_objective_gap = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const int regime = static_cast<int>(i % 5);
    RhoCoefficients c;
    double rho_min = 0.0;
    // Redraw until the regime's construction is well posed.
    for (;;) {
      const double k1 = log_uniform(rng, 0.05, 1.0);
      const double k2 = -log_uniform(rng, 0.01, 0.5);
      rho_min = log_uniform(rng, 0.01, 0.3);
      const double a = k1 * log_uniform(rng, 1e-3, 1.0);
      const double lat_lo = latency(k1, k2, std::clamp(-k2 / k1, rho_min, 1.0));
      const double lat_hi = std::max(latency(k1, k2, rho_min), latency(k1, k2, 1.0));
      double rho_u;
      double t;
      switch (regime) {
        case 0:  // unconstrained minimizer inside, slack budget
          rho_u = log_uniform(rng, rho_min * 1.01, 0.99);
          t = lat_hi * uniform(rng, 1.01, 1.5);
          break;
        case 1:  // minimizer below rho_min
          rho_u = rho_min * uniform(rng, 0.1, 0.9);
          t = lat_hi * uniform(rng, 1.01, 1.5);
          break;
        case 2:  // minimizer above 1
          rho_u = uniform(rng, 1.1, 10.0);
          t = lat_hi * uniform(rng, 1.01, 1.5);
          break;
        case 3:  // latency binding at the minimizer
          rho_u = log_uniform(rng, rho_min * 1.01, 0.99);
          t = latency(k1, k2, rho_u) - uniform(rng, 0.1, 0.9) * (latency(k1, k2, rho_u) - lat_lo);
          if (latency(k1, k2, rho_u) - lat_lo < 1e-3 * lat_lo) continue;
          break;
        default:  // budget below the smallest achievable latency
          rho_u = log_uniform(rng, rho_min, 1.0);
          t = lat_lo * uniform(rng, 0.5, 0.99);
          break;
      }
      c = {a, a * rho_u, k1, k2, t};
      break;
    }

    const RhoSolution closed = optimal_rho(c, rho_min);
    const RhoSolution scan = rho_oracle(c, rho_min, scan_points);
    ++clamps[closed.feasible ? std::string(to_string(closed.clamp)) : "infeasible"];
    bool ok = true;

    for (const std::optional<double>& root : {closed.root_low, closed.root_high}) {
      if (!root) continue;
      const double rel = std::abs(rho_latency(c, *root) - c.latency_residual) /
                         std::abs(c.latency_residual);
      worst_root = std::max(worst_root, rel);
      if (!(rel <= 1e-9)) ok = false;
    }

    if (closed.feasible && scan.feasible) {
      const double err = std::abs(closed.rho_star - scan.rho_star);
      r.worst = std::max(r.worst, err);
      if (!(err <= 1e-4)) ok = false;
      const double f_closed = rho_objective(c, closed.rho_star);
      const double f_scan = rho_objective(c, scan.rho_star);
      const double gap = (f_closed - f_scan) / std::max(1.0, std::abs(f_closed));
      worst_objective_gap = std::max(worst_objective_gap, gap);
      if (gap > 1e-12) ok = false;
    } else if (closed.feasible != scan.feasible) {
      // The scan may only miss a feasible interval narrower than its spacing.
      const double spacing = -std::log(rho_min) / static_cast<double>(scan_points - 1);
      const bool narrow = closed.feasible && closed.root_low && closed.root_high &&
                          std::log(*closed.root_high / *closed.root_low) < spacing;
      if (!narrow) ok = false;
    } else {
      ++infeasible;
    }
    if (!ok) ++r.failures;
    ++r.cases;
  }
  r.passed = r.failures == 0;
  std::ostringstream os;
  os << r.cases << " bundles (";
  bool first = true;
  for (const auto& [name, count] : clamps) {
    os << (first ? "" : ", ") << name << " " << count;
    first = false;
  }
  os << "), worst |rho err| " << r.worst << ", worst root residual " << worst_root
     << ", worst objective gain of scan " << worst_objective_gap;
  r.detail = os.str();
  r.seconds = clock.seconds();
  return r;
}

SystemParams random_scenario(std::mt19937_64& rng) {
  for (;;) {
    SystemParams p;
    p.target = {uniform(rng, -400.0, 400.0), uniform(rng, -400.0, 400.0), 0.0};
    p.sensing_decay = log_uniform(rng, 0.004, 0.02);
    p.qos_min = uniform(rng, 0.02, 0.2);
    p.data_bits = log_uniform(rng, 0.2e6, 2e6);
    p.rho_min = log_uniform(rng, 0.02, 0.2);
    p.compress_cycles_per_bit *= log_uniform(rng, 0.5, 2.0);
    p.recover_cycles_per_bit *= log_uniform(rng, 0.5, 2.0);
    p.inference_cycles_per_bit *= log_uniform(rng, 0.5, 2.0);
    p.cpu_uav_hz *= log_uniform(rng, 0.5, 2.0);
    p.cpu_bs_hz *= log_uniform(rng, 0.5, 2.0);
    p.ref_gain = db_to_linear(uniform(rng, -100.0, -80.0));
    p.bw_uav_hz = log_uniform(rng, 0.2e6, 2e6);
    p.bw_bs_hz = log_uniform(rng, 0.1e6, 2e6);
    p.gain_bs_server = db_to_linear(uniform(rng, -135.0, -120.0));
    p.p_uav_max = dbm_to_watt(uniform(rng, 20.0, 33.0));
    p.p_bs_max = dbm_to_watt(uniform(rng, 20.0, 33.0));
    p.h_min = uniform(rng, 20.0, 80.0);
    p.h_max = p.h_min + uniform(rng, 50.0, 400.0);
    p.latency_budget = uniform(rng, 0.3, 1.5);
    try {
      p.validate();
    } catch (const ConfigError&) {
      continue;
    }
    return p;
  }
}

CheckReport check_global(std::uint64_t seed, std::size_t n, std::size_t per_axis,
                         const GridSpec& grid, unsigned workers) {
  Stopwatch clock;
  CheckReport r;
  r.name = "global";
  std::mt19937_64 rng(seed);
  std::vector<SystemParams> scenarios;
  for (std::size_t i = 0; i < n; ++i) scenarios.push_back(random_scenario(rng));

  struct Outcome {
    double solved = kInf;
    double scanned = kInf;
    bool solution_valid = true;
  };
  std::vector<Outcome> outcomes(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const SystemParams& p = scenarios[i];
    Outcome& o = outcomes[i];
    const Solution sol = solve_with(p, grid, {});
    if (sol.feasible) {
      o.solved = sol.metrics.e_total;
      o.solution_valid = is_feasible(p, sol.decision).feasible();
    }
    const Position3D uav = optimal_uav_location(p).uav;
    const std::vector<double> axis_u = log_axis(p.p_uav_max * 1e-4, p.p_uav_max, per_axis);
    const std::vector<double> axis_b = log_axis(p.p_bs_max * 1e-4, p.p_bs_max, per_axis);
    const std::vector<double> axis_rho = log_axis(p.rho_min, 1.0, per_axis);
    for (Offload offload : {Offload::kServer, Offload::kBaseStation}) {
      for (double pu : axis_u) {
        for (double pb : axis_b) {
          for (double rho : axis_rho) {
            const StageMetrics m = evaluate(p, Decision{offload, uav, rho, pu, pb});
            if (m.slack_latency >= 0.0 && m.e_total < o.scanned) o.scanned = m.e_total;
          }
        }
      }
    }
  });

  std::size_t feasible = 0;
  r.worst = -kInf;
  for (const Outcome& o : outcomes) {
    ++r.cases;
    bool ok = o.solution_valid;
    if (std::isfinite(o.scanned)) {
      if (!std::isfinite(o.solved)) {
        ok = false;
      } else {
        const double ratio = o.solved / o.scanned - 1.0;
        r.worst = std::max(r.worst, ratio);
        if (!(ratio <= 0.01)) ok = false;
      }
    }
    if (std::isfinite(o.solved)) ++feasible;
    if (!ok) ++r.failures;
  }
  r.passed = r.failures == 0;
  std::ostringstream os;
  os << r.cases << " scenarios (" << feasible << " feasible), " << per_axis
     << "^3 scan per offload case, worst solve/scan - 1 = " << r.worst;
  r.detail = os.str();
  r.seconds = clock.seconds();
  return r;
}

}  // namespace semuav
