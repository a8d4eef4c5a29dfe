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

// Command-line front end for the solver library.
//
// Subcommands:
//   nash       non-cooperative equilibrium of a scenario
//   stability  discount-factor thresholds for a given agreement
//   optimize   most stable agreement within the sustainable range
//   sweep      optimize every cell of a preference grid, as CSV or JSON
//
// Scalar results are printed as "key = value" lines with shortest round-trip
// numbers. Every subcommand accepts --config FILE (or the GEOGAME_CONFIG
// environment variable) naming a key=value file whose entries mirror the long
// flags; explicit flags win over file entries, and keys meant for other
// subcommands are ignored.
//
// Each subcommand is parsed by its own top-level CLI11 app: config-file
// support only runs for a parentless app, so the usual nested-subcommand
// arrangement would silently skip --config.
//
// Exit codes:
//   0  success
//   1  usage error (bad flags, unknown subcommand)
//   2  domain error (invalid scenario or tuning parameter)
//   3  singular agreement (deviation and punishment losses coincide)
//   4  no sustainable range exists
//   5  the scalar minimizer failed to produce a finite optimum
//   6  output file could not be written

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geogame/geogame.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_value(const char* key, double v) {
  std::cout << key << " = " << geogame::io::format_double(v) << '\n';
}

void print_text(const char* key, const std::string& v) {
  std::cout << key << " = " << v << '\n';
}

void check_tuning(double tol, double shrink) {
  if (!std::isfinite(tol) || tol <= 0.0)
    throw std::invalid_argument("tol must be positive");
  if (!std::isfinite(shrink) || shrink <= 0.0 || shrink > 1.0)
    throw std::invalid_argument("shrink must be in (0, 1]");
}

void run_nash(double y_h, double y_c, double z) {
  const geogame::Scenario s{y_h, y_c, z};
  const geogame::Deployment d = geogame::nash_deployment(s);
  print_value("g_h", d.g_h);
  print_value("g_c", d.g_c);
  print_value("y", geogame::nash_temperature(s));
  print_value("loss_nc_h", geogame::noncooperative_loss(s.y_star_h, s));
  print_value("loss_nc_c", geogame::noncooperative_loss(s.y_star_c, s));
}

void run_stability(double y_h, double y_c, double z, double y_tilde) {
  const geogame::Scenario s{y_h, y_c, z};
  const geogame::Agreement a{y_tilde};
  // Computed before anything is printed so a singular agreement produces no
  // partial report.
  const geogame::StabilityReport rep = geogame::stability_report(s, a);
  print_value("y_tilde", a.y_tilde);
  print_value("loss_c_h", geogame::cooperative_loss(s.y_star_h, a, s.z));
  print_value("loss_c_c", geogame::cooperative_loss(s.y_star_c, a, s.z));
  print_value("loss_d_h", geogame::deviation_loss(s.y_star_h, a, s.z));
  print_value("loss_d_c", geogame::deviation_loss(s.y_star_c, a, s.z));
  print_value("loss_nc_h", geogame::noncooperative_loss(s.y_star_h, s));
  print_value("loss_nc_c", geogame::noncooperative_loss(s.y_star_c, s));
  print_value("delta_h", rep.delta_h);
  print_value("delta_c", rep.delta_c);
  print_value("delta_min", rep.delta_min);
  print_text("binding", geogame::to_string(rep.binding_player));
}

void run_optimize(double y_h, double y_c, double z, double tol, double shrink) {
  const geogame::Scenario s{y_h, y_c, z};
  check_tuning(tol, shrink);
  if (s.y_star_h == 0.0 && s.y_star_c == 0.0) {
    // Both players already prefer the status-quo temperature; the only
    // agreement worth naming is no deployment at all, sustained trivially.
    print_text("status", "zero-cell");
    print_value("lower", 0.0);
    print_value("upper", 0.0);
    print_value("y_tilde_opt", 0.0);
    print_value("delta_min_opt", 0.0);
    print_text("evaluations", "0");
    return;
  }
  const geogame::AgreementOptimum opt =
      geogame::most_stable_agreement(s, tol, shrink);
  print_text("status", "ok");
  print_value("lower", opt.range.lower);
  print_value("upper", opt.range.upper);
  print_value("y_tilde_opt", opt.result.minimizer);
  print_value("delta_min_opt", opt.result.objective);
  print_text("evaluations", std::to_string(opt.result.evaluations));
}

void run_sweep(const geogame::SweepConfig& cfg, const std::string& format,
               const std::string& out_path) {
  const geogame::SweepSurface surface = geogame::run_sweep(cfg);
  const std::vector<geogame::SweepCell> records =
      geogame::surface_to_records(surface);
  const std::string payload = format == "json"
                                  ? geogame::io::records_to_json(records) + "\n"
                                  : geogame::io::records_to_csv(records);
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + out_path + "' for writing");
  out << payload;
  out.flush();
  if (!out) throw IoError("failed while writing '" + out_path + "'");
  std::cout << "wrote " << records.size() << " records to " << out_path << '\n';
}

void print_usage(std::ostream& os) {
  os << "usage: geogame <subcommand> [flags]\n"
        "\n"
        "subcommands:\n"
        "  nash       non-cooperative equilibrium of a scenario\n"
        "             (--y-h --y-c --z)\n"
        "  stability  discount-factor thresholds for an agreement\n"
        "             (--y-h --y-c --z --y-tilde)\n"
        "  optimize   most stable agreement within the sustainable range\n"
        "             (--y-h --y-c --z [--tol --shrink])\n"
        "  sweep      optimize every cell of a preference grid\n"
        "             (--z [--y-h-values --y-c-values --tol --shrink\n"
        "              --format csv|json --out FILE])\n"
        "\n"
        "Every subcommand accepts --config FILE (or the GEOGAME_CONFIG\n"
        "environment variable) naming a key=value file whose entries mirror\n"
        "the long flags; explicit flags win. Run a subcommand with --help for\n"
        "details.\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    print_usage(std::cerr);
    return 1;
  }
  const std::string cmd = argv[1];
  if (cmd == "-h" || cmd == "--help" || cmd == "help") {
    print_usage(std::cout);
    return 0;
  }

  double y_h = 0.0;
  double y_c = 0.0;
  double z = 1.0;
  double y_tilde = 0.0;
  double tol = 1e-8;
  double shrink = 0.9999;
  geogame::SweepConfig sweep_defaults;
  std::vector<double> y_h_values = sweep_defaults.y_h_values;
  std::vector<double> y_c_values = sweep_defaults.y_c_values;
  std::string format = "csv";
  std::string out_path;

  CLI::App app{"", "geogame " + cmd};
  app.set_config("--config", "",
                 "key=value file mirroring the long flags; flags win")
      ->envname("GEOGAME_CONFIG");

  const auto add_scenario = [&](bool with_y_c = true) {
    app.add_option("--y-h", y_h, "preferred temperature change of player H")
        ->required();
    if (with_y_c)
      app.add_option("--y-c", y_c, "preferred temperature change of player C")
          ->required();
    app.add_option("--z", z, "deployment cost weight (positive)")->required();
  };
  const auto add_tuning = [&] {
    app.add_option("--tol", tol, "minimizer tolerance");
    app.add_option("--shrink", shrink,
                   "fraction of the sustainable range searched, in (0, 1]");
  };

  if (cmd == "nash") {
    app.description("non-cooperative equilibrium of a scenario");
    add_scenario();
  } else if (cmd == "stability") {
    app.description("discount-factor thresholds for an agreement");
    add_scenario();
    app.add_option("--y-tilde", y_tilde, "agreed temperature change")
        ->required();
  } else if (cmd == "optimize") {
    app.description("most stable agreement within the sustainable range");
    add_scenario();
    add_tuning();
  } else if (cmd == "sweep") {
    app.description("optimize every cell of a preference grid");
    app.add_option("--z", z, "deployment cost weight (positive)")->required();
    app.add_option("--y-h-values", y_h_values,
                   "comma-separated preference grid for player H")
        ->delimiter(',');
    app.add_option("--y-c-values", y_c_values,
                   "comma-separated preference grid for player C")
        ->delimiter(',');
    add_tuning();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path,
                   "write records to this file instead of stdout");
  } else {
    std::cerr << "error: unknown subcommand '" << cmd << "'\n\n";
    print_usage(std::cerr);
    return 1;
  }

  try {
    app.parse(argc - 1, argv + 1);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd == "nash") {
      run_nash(y_h, y_c, z);
    } else if (cmd == "stability") {
      run_stability(y_h, y_c, z, y_tilde);
    } else if (cmd == "optimize") {
      run_optimize(y_h, y_c, z, tol, shrink);
    } else {
      geogame::SweepConfig cfg;
      cfg.y_h_values = y_h_values;
      cfg.y_c_values = y_c_values;
      cfg.z = z;
      cfg.tol = tol;
      cfg.shrink = shrink;
      run_sweep(cfg, format, out_path);
    }
  } catch (const geogame::SingularAgreement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const geogame::NoSustainableRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const geogame::OptimizationFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
