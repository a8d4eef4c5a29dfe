// Copyright 2026 The geogame Authors
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

#ifndef GEOGAME_TESTS_ORACLES_HPP
#define GEOGAME_TESTS_ORACLES_HPP

// Reference numerics used to validate the library's closed forms from an
// independent direction: brute-force grid minimization, parabolic vertex
// refinement, bisection root finding, and central finite differences.
// Nothing in here may call into the code paths under test.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace oracles {

// Argmin of f over the uniform grid {lo, lo+step, ..., <= hi}.
// Ties resolve to the smallest x, which keeps the oracle deterministic.
template <class F>
double grid_argmin(F&& f, double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo < hi))
    throw std::invalid_argument("grid_argmin: bad bracket or step");
  double best_x = lo;
  double best_f = f(lo);
  const auto n = static_cast<std::int64_t>((hi - lo) / step);
  for (std::int64_t k = 1; k <= n; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  return best_x;
}

// Vertex of the parabola through (x-h, x, x+h). Exact (up to rounding) when f
// is quadratic, which is what makes a coarse grid argmin usable at tight
// tolerances. Falls back to x when the three points are collinear.
template <class F>
double refine_parabolic(F&& f, double x, double h) {
  const double fl = f(x - h);
  const double fm = f(x);
  const double fr = f(x + h);
  const double denom = fl - 2.0 * fm + fr;
  if (denom == 0.0) return x;
  return x + h * 0.5 * (fl - fr) / denom;
}

// Bisection on [a, b]; requires a sign change. Converges to ~|root|*1e-15
// regardless of how ill-scaled f is, which closed-form roots can then be
// checked against.
template <class F>
double bisect(F&& f, double a, double b, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0))
    throw std::invalid_argument("bisect: no sign change on bracket");
  for (int i = 0; i < max_iter; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) return m;  // bracket collapsed to adjacent doubles
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Expands geometrically from x0 in direction +1/-1 until f changes sign, then
// bisects. Used to find boundary roots without assuming anything about their
// closed form.
template <class F>
double bisect_from(F&& f, double x0, int direction, double initial_step = 0.5) {
  const double f0 = f(x0);
  double step = initial_step;
  for (int k = 0; k < 80; ++k) {
    const double x1 = x0 + direction * step;
    if ((f(x1) < 0.0) != (f0 < 0.0) || f(x1) == 0.0) {
      return direction > 0 ? bisect(f, x0, x1) : bisect(f, x1, x0);
    }
    step *= 2.0;
  }
  throw std::runtime_error("bisect_from: no sign change found");
}

// Central finite difference; h = 1e-6 keeps truncation and rounding error
// both around 1e-9 for unit-scale quadratics.
template <class F>
double central_diff(F&& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace oracles

#endif  // GEOGAME_TESTS_ORACLES_HPP
