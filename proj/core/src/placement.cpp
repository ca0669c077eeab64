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

#include "semuav/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace semuav {

double max_sensing_distance(const SystemParams& params) {
  return -std::log(params.qos_min) / params.sensing_decay;
}

PlacementResult optimal_uav_location(const SystemParams& params) {
  const double d_max = max_sensing_distance(params);
  const double h = params.h_min;
  if (h > d_max) {
    std::ostringstream os;
    os << "placement infeasible: h_min = " << h << " m exceeds the maximum sensing distance "
       << d_max << " m";
    throw InfeasibleError(os.str());
  }

  // Horizontal radius of the service disk at altitude h_min.
  const double radius_sq = d_max * d_max - h * h;
  const double tx = params.target.x;
  const double ty = params.target.y;
  const double target_sq = tx * tx + ty * ty;

  PlacementResult r;
  r.d_max = d_max;
  if (target_sq <= radius_sq) {
    r.case_tag = PlacementCase::kAboveBase;
    r.uav = {0.0, 0.0, h};
  } else {
    r.case_tag = PlacementCase::kTowardTarget;
    const double s = 1.0 - std::sqrt(radius_sq) / std::sqrt(target_sq);
    r.uav = {tx * s, ty * s, h};
  }
  r.d_target = distance_uav_target(params, r.uav);
  r.d_base = distance_uav_bs(r.uav);
  return r;
}

PlacementResult pinned_location(const SystemParams& params, const Position3D& uav) {
  PlacementResult r;
  r.uav = uav;
  r.case_tag = PlacementCase::kPinned;
  r.d_max = max_sensing_distance(params);
  r.d_target = distance_uav_target(params, uav);
  r.d_base = distance_uav_bs(uav);
  return r;
}

Position3D placement_oracle(const SystemParams& params, double grid_step) {
  if (!(grid_step > 0.0)) throw ModelError("placement_oracle: grid_step must be positive");
  const double d_max = max_sensing_distance(params);
  const double d_max_sq = d_max * d_max;
  const double tx = params.target.x;
  const double ty = params.target.y;
  const double x_lo = std::min(0.0, tx) - 50.0;
  const double x_hi = std::max(0.0, tx) + 50.0;
  const double y_lo = std::min(0.0, ty) - 50.0;
  const double y_hi = std::max(0.0, ty) + 50.0;
  const auto count = [grid_step](double lo, double hi) {
    return static_cast<long>(std::floor((hi - lo) / grid_step + 1e-9)) + 1;
  };
  const long nx = count(x_lo, x_hi);
  const long ny = count(y_lo, y_hi);
  const long nh = count(params.h_min, params.h_max);

  double best_sq = std::numeric_limits<double>::infinity();
  Position3D best;
  // Ascending lexicographic scan with a strict comparison keeps the smallest
  // (x, y, h) among ties.
  for (long i = 0; i < nx; ++i) {
    const double x = x_lo + static_cast<double>(i) * grid_step;
    const double dxt = x - tx;
    for (long j = 0; j < ny; ++j) {
      const double y = y_lo + static_cast<double>(j) * grid_step;
      const double dyt = y - ty;
      const double horiz_target_sq = dxt * dxt + dyt * dyt;
      const double horiz_base_sq = x * x + y * y;
      for (long k = 0; k < nh; ++k) {
        const double h = params.h_min + static_cast<double>(k) * grid_step;
        if (horiz_target_sq + h * h > d_max_sq) continue;
        const double base_sq = horiz_base_sq + h * h;
        if (base_sq < best_sq) {
          best_sq = base_sq;
          best = {x, y, h};
        }
      }
    }
  }
  if (!std::isfinite(best_sq)) throw InfeasibleError("placement_oracle: no feasible lattice point");
  return best;
}

}  // namespace semuav
