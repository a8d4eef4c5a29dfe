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

#ifndef GEOGAME_STABILITY_HPP
#define GEOGAME_STABILITY_HPP

// Repeated-game stability of an agreement under grim-trigger punishment:
// defect once, get the one-shot equilibrium forever after. An agreement holds
// iff each player's discount factor is at least
//
//     delta_i = (L^d_i - L^c_i) / (L^d_i - L^nc_i),
//
// the one-period temptation over the permanent punishment. The binding
// threshold is the larger of the two. Agreements where L^d_i = L^nc_i are
// singular: deviating costs the same as eternal punishment, so no patience
// level sustains cooperation and the ratio is meaningless.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "geogame/errors.hpp"
#include "geogame/model.hpp"

namespace geogame {

enum class BindingPlayer { h, c, tie };

inline std::string to_string(BindingPlayer p) {
  switch (p) {
    case BindingPlayer::h:
      return "H";
    case BindingPlayer::c:
      return "C";
    default:
      return "tie";
  }
}

// Minimal discount factor that keeps the player with preference y_star_i
// honoring the agreement. Throws SingularAgreement when the temptation
// denominator vanishes (relative to the loss scale).
inline double delta_min_player(double y_star_i, const Scenario& s,
                               const Agreement& a) {
  const double l_d = deviation_loss(y_star_i, a, s.z);
  const double l_c = cooperative_loss(y_star_i, a, s.z);
  const double l_nc = noncooperative_loss(y_star_i, s);
  const double denom = l_d - l_nc;
  if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(l_d)))
    throw SingularAgreement(
        "agreement y_tilde=" + std::to_string(a.y_tilde) +
        " is singular: deviation and punishment losses coincide, so "
        "cooperation is never rational at any discount factor");
  return (l_d - l_c) / denom;
}

struct StabilityReport {
  double delta_h;
  double delta_c;
  double delta_min;
  BindingPlayer binding_player;
};

// Both thresholds plus the binding one. Differences below 1e-9 count as a
// tie, which is what the minimized surface produces by construction.
inline StabilityReport stability_report(const Scenario& s, const Agreement& a) {
  const auto player_delta = [&](double y_star, const char* name) {
    try {
      return delta_min_player(y_star, s, a);
    } catch (const SingularAgreement& e) {
      throw SingularAgreement(std::string(e.what()) + " [player " + name + "]");
    }
  };
  const double dh = player_delta(s.y_star_h, "H");
  const double dc = player_delta(s.y_star_c, "C");
  StabilityReport report{dh, dc, std::max(dh, dc), BindingPlayer::tie};
  if (std::abs(dh - dc) >= 1e-9)
    report.binding_player = dh > dc ? BindingPlayer::h : BindingPlayer::c;
  return report;
}

// Interval of agreement temperatures that leave each player weakly better
// off cooperating than living in the one-shot equilibrium. The edges solve
// L^c_i = L^nc_i: the upper edge is H's root, the lower edge C's. Both are
// pulled inward by `shrink` so downstream searches keep off the exact
// indifference points.
struct SustainableRange {
  double lower;
  double upper;
  double shrink;
};

inline SustainableRange sustainable_range(const Scenario& s,
                                          double shrink = 0.9999) {
  if (!(shrink > 0.0) || !(shrink <= 1.0) || !std::isfinite(shrink))
    throw std::invalid_argument("shrink must be in (0, 1]");
  if (s.y_star_h == 0.0 && s.y_star_c == 0.0)
    throw NoSustainableRange(
        "both preferences are zero: the sustainable range degenerates to a "
        "single point");

  const double k = 1.0 + 0.5 * s.z;  // leading coefficient of L^c in y_tilde
  const double center_h = s.y_star_h / k;
  const double center_c = s.y_star_c / k;
  const double lnc_h = noncooperative_loss(s.y_star_h, s);
  const double lnc_c = noncooperative_loss(s.y_star_c, s);
  const double rad_h =
      center_h * center_h - (s.y_star_h * s.y_star_h - lnc_h) / k;
  const double rad_c =
      center_c * center_c - (s.y_star_c * s.y_star_c - lnc_c) / k;
  if (!(rad_h >= 0.0) || !(rad_c >= 0.0))
    throw NoSustainableRange("edge computation has a negative radicand");

  return SustainableRange{
      shrink * (center_c - std::sqrt(rad_c)),
      shrink * (center_h + std::sqrt(rad_h)),
      shrink,
  };
}

// The agreement that minimizes the binding threshold, in closed form: it is
// exactly the one-shot equilibrium temperature. The numeric optimizer exists
// to confirm this from the other direction, not to replace it.
inline double most_stable_temperature_closed_form(const Scenario& s) {
  return nash_temperature(s);
}

}  // namespace geogame

#endif  // GEOGAME_STABILITY_HPP
