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


#include "semuav/compression.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "semuav/numerics.hpp"
#include "semuav/placement.hpp"

namespace semuav {
namespace {

RhoCoefficients bundle(double a, double f, double k1, double k2, double t) {
  return RhoCoefficients{a, f, k1, k2, t};
}

TEST(Coefficients, EnergyLogExample) {
  SystemParams p;
  p.data_bits = 1e6;
  p.capacitance_uav = 1e-28;
  p.compress_cycles_per_bit = 100;
  p.cpu_uav_hz = 1e9;
  p.capacitance_bs = 1e-28;
  p.recover_cycles_per_bit = 100;
  p.cpu_bs_hz = 1e10;
  EXPECT_NEAR(compute_energy_coefficient(p), 1.01, 1e-12);
  EXPECT_LT(compute_latency_coefficient(p), 0.0);
}

TEST(Coefficients, SlopeRatioIsTransmitPower) {
  const SystemParams p;
  const Position3D uav{18, 6, 40};
  const RhoCoefficients c = rho_coefficients(p, uav, Offload::kServer, 0.37, 0.5);
  EXPECT_NEAR(c.tx_energy_slope / c.tx_latency_slope, 0.37, 1e-15);
}

TEST(Coefficients, BaseStationResidualIgnoresBsPower) {
  const SystemParams p;
  const Position3D uav{18, 6, 40};
  const RhoCoefficients lo = rho_coefficients(p, uav, Offload::kBaseStation, 0.5, 1e-3);
  const RhoCoefficients hi = rho_coefficients(p, uav, Offload::kBaseStation, 0.5, 1.0);
  EXPECT_EQ(lo.latency_residual, hi.latency_residual);
  EXPECT_NEAR(lo.latency_residual,
              p.latency_budget - p.inference_cycles_per_bit * p.data_bits / p.cpu_bs_hz, 1e-15);
}

TEST(Coefficients, ObjectiveMatchesModel) {
  const SystemParams p;
  const Position3D uav = optimal_uav_location(p).uav;
  for (Offload a : {Offload::kServer, Offload::kBaseStation}) {
    const RhoCoefficients c = rho_coefficients(p, uav, a, 0.2, 0.3);
    const StageMetrics m = evaluate(p, Decision{a, uav, 0.4, 0.2, 0.3});
    EXPECT_NEAR(rho_objective(c, 0.4), m.e_compress + m.e_uplink + m.e_recover, 1e-15);
    EXPECT_NEAR(rho_latency(c, 0.4) - c.latency_residual, m.t_total - p.latency_budget, 1e-14);
  }
}

TEST(OptimalRho, InteriorMinimizer) {
  const RhoSolution s = optimal_rho(bundle(10.0, 2.0, 1.0, -0.5, 100.0), 0.05);
  ASSERT_TRUE(s.feasible);
  EXPECT_NEAR(s.rho_star, 0.2, 1e-15);
  EXPECT_EQ(s.clamp, RhoClamp::kInterior);
}

TEST(OptimalRho, ClampsAtOne) {
  const RhoSolution s = optimal_rho(bundle(2.0, 3.0, 1.0, -0.5, 100.0), 0.05);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.rho_star, 1.0);
  EXPECT_EQ(s.clamp, RhoClamp::kOne);
}

TEST(OptimalRho, ClampsAtRhoMin) {
  const RhoSolution s = optimal_rho(bundle(10.0, 0.1, 1.0, -0.5, 100.0), 0.05);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.rho_star, 0.05);
  EXPECT_EQ(s.clamp, RhoClamp::kRhoMin);
}

TEST(OptimalRho, LatencyBindingRoots) {
  const RhoCoefficients c = bundle(10.0, 2.0, 1.0, -0.5, 0.9);
  const RhoSolution s = optimal_rho(c, 0.05);
  ASSERT_TRUE(s.feasible);
  ASSERT_TRUE(s.root_low && s.root_high);
  const auto lat = [](double r) { return r - 0.5 * std::log(r) - 0.9; };
  EXPECT_NEAR(*s.root_low, solve_bracketed(lat, 0.01, 0.5, 1e-15), 1e-12);
  EXPECT_NEAR(*s.root_high, solve_bracketed(lat, 0.5, 1.0, 1e-15), 1e-12);
  EXPECT_NEAR(*s.root_low, 0.303017, 1e-6);
  EXPECT_NEAR(*s.root_high, 0.768049, 1e-6);
  EXPECT_EQ(s.rho_star, *s.root_low);
  EXPECT_EQ(s.clamp, RhoClamp::kLatencyLow);
  for (double r : {*s.root_low, *s.root_high}) {
    EXPECT_NEAR(rho_latency(c, r), 0.9, 1e-9 * 0.9);
  }
}

TEST(OptimalRho, UpperRootBinds) {
  // Minimizer above 1 but the latency allows only rho <= 0.7685.
  const RhoSolution s = optimal_rho(bundle(1.0, 5.0, 1.0, -0.5, 0.9), 0.05);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.clamp, RhoClamp::kLatencyHigh);
  EXPECT_NEAR(s.rho_star, 0.768049, 1e-6);
}

TEST(OptimalRho, InfeasibleBelowMinimumLatency) {
  // min over rho of rho - 0.5 ln rho is 0.8466 at rho = 0.5.
  EXPECT_FALSE(optimal_rho(bundle(10.0, 2.0, 1.0, -0.5, 0.8), 0.05).feasible);
  EXPECT_FALSE(optimal_rho(bundle(10.0, 2.0, 1.0, -0.5, -0.1), 0.05).feasible);
}

TEST(OptimalRho, InfeasibleWhenRootsMissTheBox) {
  // Roots straddle 0.5 narrowly while rho_min = 0.9 excludes them.
  EXPECT_FALSE(optimal_rho(bundle(10.0, 2.0, 1.0, -0.5, 0.85), 0.9).feasible);
}

TEST(OptimalRho, TangentBudgetIsFeasible) {
  const double t = 0.5 - 0.5 * std::log(0.5);
  const RhoSolution s = optimal_rho(bundle(10.0, 2.0, 1.0, -0.5, t), 0.05);
  ASSERT_TRUE(s.feasible);
  EXPECT_NEAR(s.rho_star, 0.5, 1e-7);
}

TEST(RhoOracle, AgreesWithClosedForm) {
  const RhoSolution interior = rho_oracle(bundle(10.0, 2.0, 1.0, -0.5, 100.0), 0.05, 100000);
  ASSERT_TRUE(interior.feasible);
  EXPECT_NEAR(interior.rho_star, 0.2, 1e-4);
  EXPECT_EQ(interior.clamp, RhoClamp::kGridScan);

  const RhoCoefficients binding = bundle(10.0, 2.0, 1.0, -0.5, 0.9);
  EXPECT_NEAR(rho_oracle(binding, 0.05, 100000).rho_star, optimal_rho(binding, 0.05).rho_star,
              1e-4);
  EXPECT_FALSE(rho_oracle(bundle(10.0, 2.0, 1.0, -0.5, 0.8), 0.05, 100000).feasible);
  EXPECT_THROW(rho_oracle(binding, 0.05, 1), ModelError);
}

TEST(RhoClamp, Names) {
  EXPECT_EQ(to_string(RhoClamp::kLatencyLow), "latency_low");
  EXPECT_EQ(to_string(RhoClamp::kPinned), "pinned");
}

}  // namespace
}  // namespace semuav
