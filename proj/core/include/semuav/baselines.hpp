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

// Comparison schemes. Each one fixes or heuristically optimizes one ingredient
// of the joint problem and is evaluated through the same system model.
//
//   generate_at_server   inference always on the cloud server
//   generate_at_bs       inference always at the base station
//   non_semantic         rho = 1, raw data sent uncompressed
//   max_power            both transmitters at full power
//   fixed_uav_location   UAV hovers over the target at h_min
//   bcd                  block coordinate descent between rho and powers
//
// Variables a scheme does not name are optimized exactly as in the proposed
// solver (location by the closed form, rho in closed form, powers on the grid).

#pragma once

#include "semuav/power_search.hpp"

namespace semuav {

struct BcdOptions {
  int max_iters = 50;
  double tol = 1e-6;  // stop when the relative energy improvement falls below this

  void validate() const;  // throws ConfigError
};

/// Alternates the closed-form rho step with two 1-D power searches (p_uav then
/// p_bs) on the base power grid, starting from full power, for each offload
/// choice; keeps the better choice. Energy never increases between iterations.
Solution run_bcd(const SystemParams& params, const GridSpec& grid, const BcdOptions& options = {});

/// Infeasibility is reported through Solution::feasible.
Solution run_scheme(const SystemParams& params, Scheme scheme, const GridSpec& grid,
                    const BcdOptions& bcd = {}, unsigned workers = 1);

}  // namespace semuav
