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

#include "semuav/numerics.hpp"

#include <gtest/gtest.h>

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <numbers>
#include <random>

namespace semuav {
namespace {

constexpr double kE = std::numbers::e;

double residual(double w, double x) { return std::abs(w * std::exp(w) - x); }

TEST(LambertW0, ExactPoints) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(kE), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(lambert_w0(BranchPoint::min_argument), -1.0);
}

TEST(LambertW0, OmegaConstantMatchesBisection) {
  const double w = lambert_w0(1.0);
  const double root =
      solve_bracketed([](double v) { return v * std::exp(v) - 1.0; }, 0.0, 1.0, 1e-15);
  EXPECT_NEAR(w, root, 1e-14);
  EXPECT_NEAR(w, 0.567143, 1e-6);
}

TEST(LambertWm1, ExactAndReferencePoints) {
  EXPECT_DOUBLE_EQ(lambert_wm1(BranchPoint::min_argument), -1.0);
  const double w = lambert_wm1(-0.1);
  const double root =
      solve_bracketed([](double v) { return v * std::exp(v) + 0.1; }, -10.0, -1.0, 1e-15);
  EXPECT_NEAR(w, root, 1e-13);
  EXPECT_NEAR(w, -3.577152, 1e-6);

  const double w2 = lambert_wm1(-0.2);
  EXPECT_LT(w2, -1.0);
  EXPECT_LE(residual(w2, -0.2), 1e-15);
}

TEST(LambertW, DomainErrors) {
  EXPECT_THROW(lambert_w0(-0.5), NumericsError);
  EXPECT_THROW(lambert_wm1(-0.5), NumericsError);
  EXPECT_THROW(lambert_wm1(0.0), NumericsError);
  EXPECT_THROW(lambert_wm1(0.1), NumericsError);
  EXPECT_THROW(lambert_w0(std::nan("")), NumericsError);
}

TEST(LambertW, ArgumentsJustBelowBranchPointAreClamped) {
  const double x = BranchPoint::min_argument - 0.5 * kBranchClampWidth;
  EXPECT_DOUBLE_EQ(lambert_w0(x), -1.0);
  EXPECT_DOUBLE_EQ(lambert_wm1(x), -1.0);
}

TEST(LambertW, BranchOrderingAndResidualOnNegativeInterval) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(BranchPoint::min_argument, 0.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    if (x == 0.0) continue;
    const double w0 = lambert_w0(x);
    const double wm1 = lambert_wm1(x);
    EXPECT_GE(w0, -1.0);
    EXPECT_LE(wm1, -1.0);
    EXPECT_LE(residual(w0, x), 1e-12) << x;
    EXPECT_LE(residual(wm1, x), 1e-12) << x;
  }
}

TEST(LambertW, AgreesWithBoost) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double neg = BranchPoint::min_argument * u(rng);
    const double pos = std::exp(60.0 * u(rng)) - 1.0;
    EXPECT_NEAR(lambert_w0(pos), boost::math::lambert_w0(pos),
                1e-13 * std::max(1.0, std::abs(lambert_w0(pos))));
    EXPECT_NEAR(lambert_w0(neg), boost::math::lambert_w0(neg), 1e-8);
    if (neg < 0.0) {
      EXPECT_NEAR(lambert_wm1(neg), boost::math::lambert_wm1(neg),
                  1e-8 * std::abs(lambert_wm1(neg)));
    }
  }
}

TEST(LambertWm1FromLog, MatchesLinearFormAndHandlesUnderflow) {
  for (double x : {-0.3, -0.1, -1e-3, -1e-10, -1e-200}) {
    EXPECT_NEAR(lambert_wm1_from_log(std::log(-x)), lambert_wm1(x),
                1e-13 * std::abs(lambert_wm1(x)));
  }
  // exp(-2000) underflows; the log form still returns w with w + ln(-w) = -2000.
  const double w = lambert_wm1_from_log(-2000.0);
  EXPECT_NEAR(w + std::log(-w), -2000.0, 1e-10);
  EXPECT_LT(w, -2000.0);
}

TEST(SolveBracketed, Examples) {
  EXPECT_NEAR(solve_bracketed([](double r) { return r - 0.5; }, 0.0, 1.0, 1e-12), 0.5, 1e-12);
  const double rho_a = solve_bracketed(
      [](double r) { return r - 0.5 * std::log(r) - 0.9; }, 0.01, 0.5, 1e-14);
  EXPECT_NEAR(rho_a, 0.303017, 1e-6);
}

TEST(SolveBracketed, Errors) {
  EXPECT_THROW(solve_bracketed([](double r) { return r * r + 1.0; }, -1.0, 1.0, 1e-9),
               NumericsError);
  EXPECT_THROW(solve_bracketed([](double r) { return r; }, 1.0, -1.0, 1e-9), NumericsError);
  EXPECT_THROW(solve_bracketed([](double r) { return std::log(r); }, -1.0, 2.0, 1e-9),
               NumericsError);
}

}  // namespace
}  // namespace semuav
