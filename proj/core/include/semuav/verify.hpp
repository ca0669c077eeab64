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

// Randomized oracle suites. Each one compares a closed form or the solver
// against brute force on seeded random instances.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "semuav/power_search.hpp"
#include "semuav/system_model.hpp"

namespace semuav {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0.0;  // worst value of the suite's error metric
  double seconds = 0.0;
  std::string detail;  // short human-readable summary
};

/// |w e^w - x| <= 1e-12 max(1, |x|) on both branches plus branch ordering.
/// The error metric is the worst ratio of residual to its bound.
CheckReport check_lambert(std::uint64_t seed, std::size_t n = 10000);

/// Closed-form placement vs. the lattice search with spacing `step`. Metric:
/// worst |d_base(closed) - d_base(lattice)| divided by step * sqrt(3).
CheckReport check_placement(std::uint64_t seed, std::size_t n = 500, double step = 4.0);

/// Closed-form rho vs. a log-spaced scan of `scan_points` over [rho_min, 1],
/// on bundles forced into every clamp regime. Metric: worst |rho - rho_scan|.
CheckReport check_compression(std::uint64_t seed, std::size_t n = 500,
                              std::size_t scan_points = 100000);

/// solve() vs. an exhaustive (p_uav, p_bs, rho) scan with `per_axis` points
/// each, through evaluate(). Metric: worst solve / scan - 1.
CheckReport check_global(std::uint64_t seed, std::size_t n = 100, std::size_t per_axis = 100,
                         const GridSpec& grid = {}, unsigned workers = 1);

/// A valid random scenario spread around the defaults. Placement is always
/// feasible; the latency budget may or may not be.
SystemParams random_scenario(std::mt19937_64& rng);

}  // namespace semuav
