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

// Walks one scenario end to end: the non-cooperative equilibrium, the
// stability of an example agreement, the sustainable range, and the most
// stable agreement inside it. Build and run; no arguments.

#include <iostream>

#include "geogame/geogame.hpp"

int main() {
  using geogame::io::format_double;

  // Player H wants 2 degrees of cooling, player C wants 1 degree of warming,
  // and deployment effort is priced at z = 1.
  const geogame::Scenario scenario{-2.0, 1.0, 1.0};

  std::cout << "scenario: y*_h = " << format_double(scenario.y_star_h)
            << ", y*_c = " << format_double(scenario.y_star_c)
            << ", z = " << format_double(scenario.z) << "\n\n";

  const geogame::Deployment nash = geogame::nash_deployment(scenario);
  std::cout << "without a treaty, each player deploys against the other:\n"
            << "  g_h = " << format_double(nash.g_h)
            << "  g_c = " << format_double(nash.g_c)
            << "  temperature = " << format_double(nash.temperature()) << "\n"
            << "  losses: H = "
            << format_double(geogame::noncooperative_loss(scenario.y_star_h, scenario))
            << ", C = "
            << format_double(geogame::noncooperative_loss(scenario.y_star_c, scenario))
            << "\n\n";

  // Agree to realize the equilibrium temperature, but split the work evenly.
  const geogame::Agreement agreement{geogame::nash_temperature(scenario)};
  const geogame::StabilityReport report =
      geogame::stability_report(scenario, agreement);
  std::cout << "splitting the same temperature evenly is cheaper for both:\n"
            << "  per-player deployment = "
            << format_double(agreement.per_player_deployment()) << "\n"
            << "  minimum discount factor: H needs "
            << format_double(report.delta_h) << ", C needs "
            << format_double(report.delta_c) << " (binding: "
            << geogame::to_string(report.binding_player) << ")\n\n";

  const geogame::AgreementOptimum best =
      geogame::most_stable_agreement(scenario);
  std::cout << "agreements sustainable by sufficiently patient players lie in ["
            << format_double(best.range.lower) << ", "
            << format_double(best.range.upper) << "]\n"
            << "the most stable one targets y~ = "
            << format_double(best.result.minimizer)
            << " and needs delta >= " << format_double(best.result.objective)
            << "\n";
  return 0;
}
