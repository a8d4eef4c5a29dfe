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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "geogame/optimize.hpp"
#include "geogame/stability.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using geogame::Agreement;
using geogame::Scenario;

TEST_CASE("quadratic bowl") {
  const auto f = [](double x) { return (x - 2.0) * (x - 2.0) + 0.5; };
  const auto r = geogame::minimize_scalar(f, 0.0, 5.0);
  REQUIRE_THAT(r.minimizer, WithinAbs(2.0, 1e-6));
  REQUIRE(r.objective == f(r.minimizer));  // reported value is a real evaluation
  REQUIRE(r.evaluations <= 200);
}

TEST_CASE("asymmetric quartic with an interior minimum") {
  const auto f = [](double x) { return std::pow(x - 0.7, 4) + 3.0 * x; };
  // f' = 4(x-0.7)^3 + 3 = 0  =>  x = 0.7 - (3/4)^(1/3)
  const double x_star = 0.7 - std::cbrt(0.75);
  const auto r = geogame::minimize_scalar(f, -4.0, 4.0);
  REQUIRE_THAT(r.minimizer, WithinAbs(x_star, 1e-6));
  REQUIRE(r.evaluations <= 200);
}

TEST_CASE("kinked objective still converges") {
  const auto f = [](double x) { return std::abs(x - 0.3) + 1.0; };
  const auto r = geogame::minimize_scalar(f, -2.0, 2.0);
  REQUIRE_THAT(r.minimizer, WithinAbs(0.3, 1e-6));
}

TEST_CASE("minimum at a bracket edge stays inside the bracket") {
  const auto f = [](double x) { return x; };
  const auto r = geogame::minimize_scalar(f, 1.25, 9.0);
  REQUIRE(r.minimizer >= 1.25);
  REQUIRE(r.minimizer <= 9.0);
  REQUIRE_THAT(r.minimizer, WithinAbs(1.25, 1e-5));
}

TEST_CASE("every probe lands inside the bracket") {
  std::vector<double> probes;
  const auto f = [&](double x) {
    probes.push_back(x);
    return std::cos(x);
  };
  (void)geogame::minimize_scalar(f, 2.0, 5.0);
  REQUIRE_FALSE(probes.empty());
  for (const double x : probes) {
    REQUIRE(x >= 2.0);
    REQUIRE(x <= 5.0);
  }
}

TEST_CASE("repeated runs are bitwise identical") {
  const auto f = [](double x) { return std::sin(3.0 * x) + 0.1 * x * x; };
  const auto a = geogame::minimize_scalar(f, -3.0, 3.0);
  const auto b = geogame::minimize_scalar(f, -3.0, 3.0);
  REQUIRE(a.minimizer == b.minimizer);
  REQUIRE(a.objective == b.objective);
  REQUIRE(a.evaluations == b.evaluations);
}

TEST_CASE("bad brackets and tolerances are rejected") {
  const auto f = [](double x) { return x * x; };
  REQUIRE_THROWS_AS(geogame::minimize_scalar(f, 1.0, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(geogame::minimize_scalar(f, 2.0, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(geogame::minimize_scalar(f, 0.0, 1.0, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(geogame::minimize_scalar(f, 0.0, 1.0, -1e-9), std::invalid_argument);
}

TEST_CASE("singular probes are skipped, not fatal") {
  // A band in the middle of the bracket refuses to evaluate; the minimizer
  // must treat it as arbitrarily bad and settle elsewhere.
  const auto f = [](double x) {
    if (x > 0.9 && x < 1.4)
      throw geogame::SingularAgreement("refused probe");
    return (x - 2.0) * (x - 2.0);
  };
  const auto r = geogame::minimize_scalar(f, 0.0, 3.0);
  REQUIRE_THAT(r.minimizer, WithinAbs(2.0, 1e-5));
  REQUIRE(std::isfinite(r.objective));
}

TEST_CASE("an everywhere-singular objective fails loudly") {
  const auto f = [](double) -> double {
    throw geogame::SingularAgreement("nothing to see");
  };
  REQUIRE_THROWS_AS(geogame::minimize_scalar(f, 0.0, 1.0),
                    geogame::OptimizationFailed);
}

TEST_CASE("discount-threshold objectives reach the preferred agreement") {
  SECTION("symmetric scenario") {
    const Scenario s{-1.0, 1.0, 4.0};
    const auto range = geogame::sustainable_range(s);
    const auto obj = [&](double y) {
      return geogame::stability_report(s, Agreement{y}).delta_min;
    };
    const auto r = geogame::minimize_scalar(obj, range.lower, range.upper);
    REQUIRE_THAT(r.minimizer, WithinAbs(0.0, 1e-4));
    const double grid = oracles::grid_argmin(obj, range.lower, range.upper,
                                             1e-5 * (range.upper - range.lower));
    REQUIRE_THAT(r.minimizer, WithinAbs(grid, 1e-4 * (range.upper - range.lower)));
  }
  SECTION("worked scenario lands on the kink") {
    const Scenario s{-2.0, 1.0, 1.0};
    const auto range = geogame::sustainable_range(s);
    const auto obj = [&](double y) {
      return geogame::stability_report(s, Agreement{y}).delta_min;
    };
    const auto r = geogame::minimize_scalar(obj, range.lower, range.upper);
    REQUIRE_THAT(r.minimizer, WithinAbs(-1.0 / 3.0, 1e-4));
    REQUIRE_THAT(r.objective, WithinAbs(0.2, 1e-6));
    REQUIRE(r.evaluations <= 200);
  }
}
