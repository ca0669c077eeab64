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

#include "semuav/system_model.hpp"

namespace semuav {

enum class PlacementCase : int {
  kPinned = 0,       // location imposed from outside, not optimized
  kAboveBase = 1,    // target close enough: hover over the base station
  kTowardTarget = 2, // move along the BS-target direction to the service edge
};

struct PlacementResult {
  Position3D uav;
  PlacementCase case_tag = PlacementCase::kAboveBase;
  double d_max = 0.0;        // largest UAV-target distance meeting qos_min
  double d_target = 0.0;     // UAV-target distance at `uav`
  double d_base = 0.0;       // UAV-BS distance at `uav`
};

/// -ln(qos_min) / sensing_decay.
double max_sensing_distance(const SystemParams& params);

/// Closest point to the base station (the origin) that still senses the
/// target with quality qos_min, at altitude h_min. Throws InfeasibleError when
/// h_min exceeds the maximum sensing distance.
PlacementResult optimal_uav_location(const SystemParams& params);

/// Wraps an externally chosen location in a PlacementResult (kPinned).
PlacementResult pinned_location(const SystemParams& params, const Position3D& uav);

/// Brute-force check of optimal_uav_location: scans a lattice with spacing
/// `grid_step` over x in [min(0,x_T)-50, max(0,x_T)+50] (y likewise) and
/// h in [h_min, h_max], keeps points meeting the QoS and altitude constraints,
/// and returns the one nearest the base station (ties: smallest (x, y, h)).
/// Throws InfeasibleError if no lattice point is feasible.
Position3D placement_oracle(const SystemParams& params, double grid_step);

}  // namespace semuav
