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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace semuav {
namespace {

constexpr int kMaxIterations = 50;
constexpr double kStepTol = 1e-15;

[[noreturn]] void throw_domain(const char* fn, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": argument " << x << " outside the real domain";
  throw NumericsError(os.str());
}

// Series about the branch point in p = +-sqrt(2(e*x + 1)); p > 0 selects W0.
double branch_series(double x, double sign) {
  const double t = std::max(0.0, 2.0 * (std::numbers::e * x + 1.0));
  const double p = sign * std::sqrt(t);
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// Halley refinement of w * exp(w) = x.
double halley(double w, double x) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= kStepTol * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double x) {
  constexpr double kMin = BranchPoint::min_argument;
  if (std::isnan(x) || x < kMin - kBranchClampWidth) throw_domain("lambert_w0", x);
  if (x <= kMin) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < -0.32) {
    w = branch_series(x, 1.0);
  } else if (x < 3.0) {
    // Winitzki's approximation.
    const double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  return std::max(-1.0, halley(w, x));
}

double lambert_wm1(double x) {
  constexpr double kMin = BranchPoint::min_argument;
  if (std::isnan(x) || x >= 0.0 || x < kMin - kBranchClampWidth) throw_domain("lambert_wm1", x);
  if (x <= kMin) return -1.0;
  if (x > -0.2) return lambert_wm1_from_log(std::log(-x));
  return std::min(-1.0, halley(branch_series(x, -1.0), x));
}

double lambert_wm1_from_log(double log_neg_x) {
  if (std::isnan(log_neg_x) || log_neg_x > -1.0 + kBranchClampWidth * std::numbers::e) {
    throw_domain("lambert_wm1_from_log", log_neg_x);
  }
  if (log_neg_x == -std::numeric_limits<double>::infinity()) {
    return -std::numeric_limits<double>::infinity();
  }
  // Close to the branch point the linear form is better conditioned.
  if (log_neg_x > -1.6) return lambert_wm1(-std::exp(log_neg_x));

  // Newton on g(w) = w + log(-w) - L.
  const double l = log_neg_x;
  const double ll = std::log(-l);
  double w = l - ll + ll / l;
  for (int i = 0; i < kMaxIterations; ++i) {
    const double g = w + std::log(-w) - l;
    const double dw = g / (1.0 + 1.0 / w);
    w -= dw;
    if (std::abs(dw) <= kStepTol * std::abs(w)) break;
  }
  return std::min(-1.0, w);
}

}  // namespace semuav
