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

#include <gtest/gtest.h>

#include <cmath>

namespace semuav {
namespace {

// Sets sensing_decay so that the service distance equals d_max.
SystemParams with_service_distance(double d_max) {
  SystemParams p;
  p.sensing_decay = -std::log(p.qos_min) / d_max;
  return p;
}

TEST(MaxSensingDistance, Examples) {
  SystemParams p;
  p.sensing_decay = 0.01;
  p.qos_min = std::exp(-1.0);
  EXPECT_NEAR(max_sensing_distance(p), 100.0, 1e-12);
  p.qos_min = 0.2;
  EXPECT_NEAR(max_sensing_distance(p), 160.944, 1e-3);
  p.qos_min = 1.0 - 1e-12;
  EXPECT_LT(max_sensing_distance(p), 1e-9);
}

TEST(OptimalLocation, AboveBaseWhenTargetIsCovered) {
  const SystemParams p = with_service_distance(400.0);
  const PlacementResult r = optimal_uav_location(p);
  EXPECT_EQ(r.case_tag, PlacementCase::kAboveBase);
  EXPECT_EQ(r.uav.x, 0.0);
  EXPECT_EQ(r.uav.y, 0.0);
  EXPECT_EQ(r.uav.h, 40.0);
  EXPECT_DOUBLE_EQ(r.d_base, 40.0);
}

TEST(OptimalLocation, TowardTargetOnServiceEdge) {
  const SystemParams p = with_service_distance(200.0);
  const PlacementResult r = optimal_uav_location(p);
  EXPECT_EQ(r.case_tag, PlacementCase::kTowardTarget);
  const double s = 0.3803226646068134;
  EXPECT_NEAR(r.uav.x, 114.097, 1e-3);
  EXPECT_NEAR(r.uav.y, 38.032, 1e-3);
  EXPECT_NEAR(r.uav.x / 300.0, s, 1e-12);
  EXPECT_EQ(r.uav.h, 40.0);
  EXPECT_NEAR(r.d_target, 200.0, 1e-9);
  EXPECT_NEAR(sensing_qos(p, r.uav), p.qos_min, 1e-12);
}

TEST(OptimalLocation, TargetAtOriginHoversAtMinimumAltitude) {
  SystemParams p = with_service_distance(60.0);
  p.target = {0, 0, 0};
  const PlacementResult r = optimal_uav_location(p);
  EXPECT_EQ(r.case_tag, PlacementCase::kAboveBase);
  EXPECT_EQ(r.uav.h, p.h_min);
}

TEST(OptimalLocation, InfeasibleWhenMinimumAltitudeOutOfRange) {
  SystemParams p = with_service_distance(30.0);  // below h_min = 40
  EXPECT_THROW(optimal_uav_location(p), InfeasibleError);
}

TEST(PinnedLocation, FixedAboveTarget) {
  const SystemParams p;
  const PlacementResult r = pinned_location(p, {p.target.x, p.target.y, p.h_min});
  EXPECT_EQ(r.case_tag, PlacementCase::kPinned);
  EXPECT_DOUBLE_EQ(r.d_target, p.h_min);
}

TEST(Oracle, AboveBaseCase) {
  const SystemParams p = with_service_distance(400.0);
  const Position3D o = placement_oracle(p, 5.0);
  EXPECT_LE(std::hypot(o.x, o.y, o.h - 40.0), 5.0 * std::sqrt(3.0));
  EXPECT_GE(distance_uav_bs(o), optimal_uav_location(p).d_base - 1e-9);
}

TEST(Oracle, TowardTargetCase) {
  const SystemParams p = with_service_distance(200.0);
  const Position3D o = placement_oracle(p, 2.0);
  const PlacementResult r = optimal_uav_location(p);
  EXPECT_LE(std::abs(distance_uav_bs(o) - r.d_base), 2.0 * std::sqrt(3.0));
  EXPECT_GE(distance_uav_bs(o), r.d_base - 1e-9);
  EXPECT_THROW(placement_oracle(p, 0.0), ModelError);
}

}  // namespace
}  // namespace semuav
