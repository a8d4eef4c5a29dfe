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

#ifndef GEOGAME_MODEL_HPP
#define GEOGAME_MODEL_HPP

// Stage game of the two-player deployment model. Two players, H (prefers a
// cooler world, y*_H <= 0 conventionally) and C (prefers it warmer,
// y*_C >= 0), each pick a deployment g_i; the realized temperature change is
// y = g_h + g_c and each player pays
//
//     L_i = (y*_i - y)^2 + z (g_i^2 + g_j^2),
//
// i.e. a quadratic miss on their preferred temperature plus side effects that
// scale with the risk factor z and fall on everyone regardless of who
// deployed. Everything downstream (thresholds, ranges, sweeps) is built from
// the closed forms in this header.

#include <cmath>
#include <stdexcept>
#include <string>

namespace geogame {

namespace detail {

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw std::domain_error(std::string(name) + " must be finite");
}

inline void require_risk(double z) {
  require_finite(z, "z");
  if (!(z > 0.0))
    throw std::domain_error("z must be positive (z > 0); got " +
                            std::to_string(z));
}

}  // namespace detail

// A game instance: the two temperature preferences and the side-effect
// weight. Preferences are arbitrary finite reals; z = 0 would make unbounded
// deployment free and is rejected.
struct Scenario {
  double y_star_h;
  double y_star_c;
  double z;

  Scenario(double y_star_h_, double y_star_c_, double z_)
      : y_star_h(y_star_h_), y_star_c(y_star_c_), z(z_) {
    detail::require_finite(y_star_h, "y_star_h");
    detail::require_finite(y_star_c, "y_star_c");
    detail::require_risk(z);
  }
};

// A pair of one-shot deployments.
struct Deployment {
  double g_h;
  double g_c;

  double temperature() const { return g_h + g_c; }
};

// A treaty temperature: both players agree to deploy exactly half of it, so
// the implied per-player deployment is 0.5 * y_tilde with no rounding slack.
struct Agreement {
  double y_tilde;

  explicit Agreement(double y_tilde_) : y_tilde(y_tilde_) {
    detail::require_finite(y_tilde, "y_tilde");
  }

  double per_player_deployment() const { return 0.5 * y_tilde; }
};

// One period's loss for a player with preference y_star_i when the realized
// temperature is y and the two deployments are g_own and g_other. Symmetric
// in the deployments: side effects do not care who caused them.
inline double loss(double y_star_i, double y, double g_own, double g_other,
                   double z) {
  detail::require_finite(y_star_i, "y_star_i");
  detail::require_finite(y, "y");
  detail::require_finite(g_own, "g_own");
  detail::require_finite(g_other, "g_other");
  detail::require_risk(z);
  const double miss = y_star_i - y;
  return miss * miss + z * (g_own * g_own + g_other * g_other);
}

// Unique equilibrium of the simultaneous one-shot game: each deployment is
// the best response to the other. H overshoots cooling and C counteracts
// (or vice versa), burning side effects in the tug of war.
inline Deployment nash_deployment(const Scenario& s) {
  const double denom = s.z * s.z + 2.0 * s.z;
  return Deployment{
      (s.y_star_h * (s.z + 1.0) - s.y_star_c) / denom,
      (s.y_star_c * (s.z + 1.0) - s.y_star_h) / denom,
  };
}

// Equilibrium temperature, reduced: the deployments' tug of war cancels down
// to the preference average shrunk by the risk factor.
inline double nash_temperature(const Scenario& s) {
  return (s.y_star_h + s.y_star_c) / (s.z + 2.0);
}

// Per-period loss while both players honor the agreement (symmetric split).
inline double cooperative_loss(double y_star_i, const Agreement& a, double z) {
  detail::require_finite(y_star_i, "y_star_i");
  detail::require_risk(z);
  const double miss = y_star_i - a.y_tilde;
  return miss * miss + 0.5 * z * a.y_tilde * a.y_tilde;
}

// Per-period loss in the one-shot equilibrium, for a player with preference
// y_star_i inside the given scenario.
inline double noncooperative_loss(double y_star_i, const Scenario& s) {
  detail::require_finite(y_star_i, "y_star_i");
  const double denom = s.z * s.z + 2.0 * s.z;
  const double zp1 = s.z + 1.0;
  const double miss =
      y_star_i * denom - (s.y_star_h + s.y_star_c) * zp1 + s.y_star_c + s.y_star_h;
  const double dev_h = s.y_star_h * zp1 - s.y_star_c;
  const double dev_c = s.y_star_c * zp1 - s.y_star_h;
  return (miss * miss + s.z * (dev_h * dev_h + dev_c * dev_c)) /
         (denom * denom);
}

// Optimal one-period defection while the other player still deploys the
// agreed half: the quadratic's interior stationary point.
inline double deviation_best_response(double y_star_i, const Agreement& a,
                                      double z) {
  detail::require_finite(y_star_i, "y_star_i");
  detail::require_risk(z);
  return (y_star_i - 0.5 * a.y_tilde) / (z + 1.0);
}

// Loss of the defecting period itself, evaluated at the best response.
inline double deviation_loss(double y_star_i, const Agreement& a, double z) {
  const double half = 0.5 * a.y_tilde;
  const double g_d = deviation_best_response(y_star_i, a, z);
  const double miss = y_star_i - (half + g_d);
  return miss * miss + z * (half * half + g_d * g_d);
}

}  // namespace geogame

#endif  // GEOGAME_MODEL_HPP
