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

// Joint solver. Placement and the compression ratio have closed forms; what
// remains is a non-convex problem in the two transmit powers, solved by
// exhaustive grid search per offload choice. The better offload choice wins.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "semuav/compression.hpp"
#include "semuav/placement.hpp"
#include "semuav/system_model.hpp"

namespace semuav {

enum class Spacing { kLog, kLinear };

/// Power grid. Each axis spans [floor_ratio * p_max, p_max]; the floor keeps
/// the search off the open bound p = 0. After the base pass, `refine_rounds`
/// passes re-grid a window around the incumbent whose width shrinks by
/// `refine_shrink` each round.
struct GridSpec {
  std::size_t n_pu = 200;
  std::size_t n_pb = 200;
  Spacing spacing = Spacing::kLog;
  double floor_ratio = 1e-4;
  int refine_rounds = 2;
  double refine_shrink = 10.0;

  void validate() const;  // throws ConfigError
};

/// Base grid for one power axis, endpoints exact.
std::vector<double> power_axis(double p_max, std::size_t n, const GridSpec& grid);

enum class Scheme {
  kProposed,
  kGenerateAtServer,
  kGenerateAtBs,
  kNonSemantic,
  kMaxPower,
  kFixedUavLocation,
  kBcd,
};

inline constexpr std::array<Scheme, 7> kAllSchemes = {
    Scheme::kProposed,    Scheme::kGenerateAtServer, Scheme::kGenerateAtBs,
    Scheme::kNonSemantic, Scheme::kMaxPower,         Scheme::kFixedUavLocation,
    Scheme::kBcd};

std::string_view to_string(Scheme scheme);
/// Throws ConfigError for unknown names.
Scheme parse_scheme(std::string_view name);

struct GridStats {
  std::size_t evaluated = 0;
  std::size_t feasible = 0;
};

/// Variables held fixed during the search.
struct SearchPins {
  std::optional<double> rho;
  std::optional<double> p_uav;
  std::optional<double> p_bs;
};

/// Best point found for one offload choice.
struct CaseResult {
  bool feasible = false;
  double p_uav = 0.0;
  double p_bs = 0.0;
  double rho = 1.0;
  double energy = 0.0;  // search objective at the returned point, J
  RhoClamp clamp = RhoClamp::kInterior;
  GridStats stats;
};

/// Grid search over (p_uav, p_bs) at a fixed location and offload choice, with
/// the optimal compression ratio recomputed in closed form at every point.
/// With the inference at the base station the p_bs axis collapses to the
/// single value p_bs_max. Ties go to the smallest (p_uav, p_bs).
CaseResult solve_for_offload(const SystemParams& params, const Position3D& uav, Offload offload,
                             const GridSpec& grid, const SearchPins& pins = {},
                             unsigned workers = 1);

/// 0 (server) iff v_server < v_bs; the base station wins ties. Throws
/// InfeasibleError when both values are infinite.
Offload offload_decision(double v_server, double v_bs);

struct Solution {
  Scheme scheme = Scheme::kProposed;
  bool feasible = false;
  Decision decision;
  StageMetrics metrics;
  double v_server = 0.0;  // best energy with inference on the server (+inf if none)
  double v_bs = 0.0;      // best energy with inference at the base station
  std::array<std::optional<Decision>, 2> case_decisions;  // indexed by indicator()
  PlacementResult placement;
  RhoClamp rho_clamp = RhoClamp::kInterior;
  GridStats stats;
  int bcd_iterations = 0;
  std::vector<double> bcd_trace;  // energy after each BCD iteration
};

/// Restrictions that turn the joint solver into a baseline.
struct SolveOptions {
  std::optional<Offload> only_offload;
  std::optional<Position3D> uav;  // skip placement, use this location
  SearchPins pins;
  unsigned workers = 1;
};

/// Full pipeline with restrictions; infeasibility is reported via
/// Solution::feasible. Invalid params still throw ConfigError.
Solution solve_with(const SystemParams& params, const GridSpec& grid, const SolveOptions& options);

/// Unrestricted joint optimum. Throws InfeasibleError when placement or both
/// offload cases are infeasible.
Solution solve(const SystemParams& params, const GridSpec& grid = {}, unsigned workers = 1);

}  // namespace semuav
