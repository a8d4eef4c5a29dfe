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

#ifndef GEOGAME_OPTIMIZE_HPP
#define GEOGAME_OPTIMIZE_HPP

// Bounded scalar minimization: golden-section search with successive
// parabolic interpolation (Brent). Derivative-free, deterministic, and
// tolerant of objectives that refuse to evaluate at isolated points — a
// probe that throws SingularAgreement is treated as infinitely bad and the
// search continues around it.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "geogame/errors.hpp"

namespace geogame {

struct OptimizeResult {
  double minimizer;
  double objective;  // the objective as actually evaluated at `minimizer`
  int evaluations;
};

// Minimizes f over [lower, upper]. The returned minimizer is within about
// tol + |x|*sqrt(machine epsilon) of a local minimum; for the unimodal
// objectives this library produces that is the global one. Well under 200
// evaluations at the default tolerance on unit-scale brackets.
//
// Throws std::invalid_argument for a malformed bracket or tolerance and
// OptimizationFailed if no probe ever produced a finite value.
template <class F>
OptimizeResult minimize_scalar(F&& f, double lower, double upper,
                               double tol = 1e-8) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper))
    throw std::invalid_argument("minimize_scalar: need finite lower < upper");
  if (!std::isfinite(tol) || !(tol > 0.0))
    throw std::invalid_argument("minimize_scalar: tol must be positive");

  constexpr double golden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr int max_iterations = 1000;  // tolerance stop fires far earlier

  int evaluations = 0;
  const auto eval = [&](double t) -> double {
    ++evaluations;
    double value;
    try {
      value = f(t);
    } catch (const SingularAgreement&) {
      return inf;
    }
    return std::isnan(value) ? inf : value;
  };

  double a = lower, b = upper;
  double x = a + golden * (b - a);  // best point so far
  double w = x;                     // runner-up
  double v = w;                     // previous runner-up
  double fx = eval(x), fw = fx, fv = fx;
  double d = 0.0;  // last step
  double e = 0.0;  // step before last

  for (int iter = 0; iter < max_iterations; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = sqrt_eps * std::abs(x) + tol;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

    double p = 0.0, q = 0.0, r = 0.0;
    bool take_parabola = false;
    if (std::abs(e) > tol1) {
      // Fit a parabola through (v, fv), (w, fw), (x, fx).
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      r = e;
      e = d;
      // Accept only if the vertex lies inside the bracket and the step is
      // less than half the one before last; NaNs from infinite losses fail
      // these comparisons and fall through to a golden step.
      take_parabola =
          std::abs(p) < std::abs(0.5 * q * r) && p > q * (a - x) && p < q * (b - x);
    }
    if (take_parabola) {
      d = p / q;
      const double u_trial = x + d;
      // Keep the probe off the ends of the bracket.
      if (u_trial - a < tol2 || b - u_trial < tol2) d = x < m ? tol1 : -tol1;
    } else {
      e = (x < m ? b : a) - x;
      d = golden * e;
    }

    // Never evaluate closer than tol1 to the incumbent.
    const double u =
        x + (std::abs(d) >= tol1 ? d : (d > 0.0 ? tol1 : -tol1));
    const double fu = eval(u);

    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }

  if (!std::isfinite(fx))
    throw OptimizationFailed(
        "minimize_scalar: objective was singular at every probe");
  return OptimizeResult{x, fx, evaluations};
}

}  // namespace geogame

#endif  // GEOGAME_OPTIMIZE_HPP
