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

#include <cmath>
#include <concepts>
#include <numbers>
#include <string>

#include "semuav/errors.hpp"

namespace semuav {

/// The branch point of the real Lambert W function, -1/e.
struct BranchPoint {
  static constexpr double min_argument = -1.0 / std::numbers::e;
};

/// Arguments at most this far below -1/e are treated as the branch point.
inline constexpr double kBranchClampWidth = 1e-15;

/// Principal branch W0: the solution w >= -1 of w * exp(w) = x, x >= -1/e.
double lambert_w0(double x);

/// Secondary branch W-1: the solution w <= -1 of w * exp(w) = x,
/// -1/e <= x < 0.
double lambert_wm1(double x);

/// W-1 evaluated from log(-x) instead of x. Stays accurate when -x is too
/// small to represent (x underflows to -0). Requires log_neg_x <= -1.
double lambert_wm1_from_log(double log_neg_x);

/// Bisection on a sign-changing bracket. Deterministic: the same inputs always
/// take the same sequence of midpoints. Returns the midpoint of the final
/// bracket, whose width is at most `tol`.
template <typename F>
  requires std::invocable<F&, double>
double solve_bracketed(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw NumericsError("solve_bracketed: requires lo < hi");
  if (!(tol > 0.0)) throw NumericsError("solve_bracketed: requires tol > 0");
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw NumericsError("solve_bracketed: non-finite function value at bracket end");
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw NumericsError("solve_bracketed: no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  // 2000 halvings exhaust any double-precision bracket.
  for (int i = 0; i < 2000 && hi - lo > tol; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (!std::isfinite(f_mid)) throw NumericsError("solve_bracketed: non-finite function value");
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace semuav
