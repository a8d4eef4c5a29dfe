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

#ifndef GEOGAME_SWEEP_HPP
#define GEOGAME_SWEEP_HPP

// Preference-grid sweep: for every (y*_H, y*_C) cell, find the agreement
// temperature that minimizes the binding discount threshold inside that
// cell's sustainable range, and record it. Cells are independent; the record
// order is the loop order (warm preference outer, counting down from 0; cool
// preference inner, counting up from 0).

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "geogame/model.hpp"
#include "geogame/optimize.hpp"
#include "geogame/stability.hpp"

namespace geogame {

struct SweepConfig {
  std::vector<double> y_h_values{0.0, -1.0, -2.0, -3.0, -4.0, -5.0, -6.0};
  std::vector<double> y_c_values{0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  double z = 1.0;
  double tol = 1e-8;
  double shrink = 0.9999;
};

enum class CellStatus { ok, zero_cell, failed };

inline std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::ok:
      return "ok";
    case CellStatus::zero_cell:
      return "zero-cell";
    default:
      return "failed";
  }
}

struct SweepCell {
  double y_star_h;
  double y_star_c;
  double y_tilde_opt;
  double delta_min_opt;
  CellStatus status;
  std::string diagnostic;  // empty unless status == failed
};

struct SweepSurface {
  std::vector<double> y_h_values;
  std::vector<double> y_c_values;
  std::vector<SweepCell> cells;  // row-major: y_h outer, y_c inner

  const SweepCell& cell(std::size_t i, std::size_t j) const {
    return cells.at(i * y_c_values.size() + j);
  }
};

// The sustainable range of a scenario together with the threshold-minimizing
// agreement inside it: the per-cell kernel of the sweep, also useful on its
// own.
struct AgreementOptimum {
  SustainableRange range;
  OptimizeResult result;
};

inline AgreementOptimum most_stable_agreement(const Scenario& s,
                                              double tol = 1e-8,
                                              double shrink = 0.9999) {
  const SustainableRange range = sustainable_range(s, shrink);
  const auto objective = [&s](double y) {
    return stability_report(s, Agreement{y}).delta_min;
  };
  return AgreementOptimum{
      range, minimize_scalar(objective, range.lower, range.upper, tol)};
}

inline SweepSurface run_sweep(const SweepConfig& cfg) {
  if (cfg.y_h_values.empty() || cfg.y_c_values.empty())
    throw std::invalid_argument("run_sweep: preference value lists must be non-empty");
  for (const double v : cfg.y_h_values) detail::require_finite(v, "y_h_values entry");
  for (const double v : cfg.y_c_values) detail::require_finite(v, "y_c_values entry");
  detail::require_risk(cfg.z);
  if (!std::isfinite(cfg.tol) || !(cfg.tol > 0.0))
    throw std::invalid_argument("run_sweep: tol must be positive");
  if (!std::isfinite(cfg.shrink) || !(cfg.shrink > 0.0) || !(cfg.shrink <= 1.0))
    throw std::invalid_argument("run_sweep: shrink must be in (0, 1]");

  SweepSurface surface{cfg.y_h_values, cfg.y_c_values, {}};
  surface.cells.reserve(cfg.y_h_values.size() * cfg.y_c_values.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (const double y_h : cfg.y_h_values) {
    for (const double y_c : cfg.y_c_values) {
      if (y_h == 0.0 && y_c == 0.0) {
        // Nothing to stabilize when nobody wants a temperature change;
        // recorded as zero by convention rather than computed.
        surface.cells.push_back({y_h, y_c, 0.0, 0.0, CellStatus::zero_cell, ""});
        continue;
      }
      try {
        const Scenario s{y_h, y_c, cfg.z};
        const AgreementOptimum opt = most_stable_agreement(s, cfg.tol, cfg.shrink);
        surface.cells.push_back({y_h, y_c, opt.result.minimizer,
                                 opt.result.objective, CellStatus::ok, ""});
      } catch (const std::exception& e) {
        // One bad cell must not take down the rest of the surface.
        surface.cells.push_back({y_h, y_c, nan, nan, CellStatus::failed, e.what()});
      }
    }
  }
  return surface;
}

// Flattened copy of the cells in record (loop) order.
inline std::vector<SweepCell> surface_to_records(const SweepSurface& surface) {
  return surface.cells;
}

}  // namespace geogame

#endif  // GEOGAME_SWEEP_HPP
