// polyduality: command-line front end for the polygon area/perimeter toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "polyduality/commands.hpp"

using namespace polyduality;

int main(int argc, char** argv) {
  CLI::App app{"Critical points, Cerf diagrams, homology and duality for planar polygon spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> n;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format_name;
  std::optional<std::string> out_path;
  std::optional<std::string> config_path;

  app.add_option("--n", n, "number of vertices (n >= 3)");
  app.add_option("--tol", tol,
                 "residual tolerance (stars/certify/report) or curve tolerance (homology)");
  app.add_option("--seed", seed, "seed for pseudo-random sampling");
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}, CLI::ignore_case));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--config", config_path, "key=value file overriding tolerance defaults");

  auto* stars = app.add_subcommand("stars", "catalog of regular stars and folds");

  auto* certify = app.add_subcommand("certify", "certify one critical class both ways");
  std::optional<int> winding;
  bool fold = false;
  certify->add_option("--w", winding, "winding number");
  certify->add_flag("--fold", fold, "the complete fold (even n)");

  auto* homology = app.add_subcommand("homology", "homology of a fixed-area-and-perimeter fiber");
  HomologyQuery query;
  homology->add_option("--region", query.region, "W<odd>, D<even>, fold or zero");
  homology->add_option("--pi", query.pi, "perimeter level");
  homology->add_option("--area", query.area, "area level");

  auto* cerf = app.add_subcommand("cerf", "discriminant curves and chambers, optional SVG");
  std::optional<std::string> svg_path;
  cerf->add_option("--svg", svg_path, "write an SVG diagram to this path");

  auto* report = app.add_subcommand("report", "full verification bundle for one n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (config_path) apply_config_file(*config_path, cfg);
    if (!n) throw UsageError("--n is required");
    cfg.n = *n;
    if (seed) cfg.seed = *seed;
    if (tol) {
      if (homology->parsed()) {
        cfg.curve_tol = *tol;
      } else {
        cfg.crit_tol = *tol;
      }
    }
    if (format_name) {
      std::string f = *format_name;
      for (auto& ch : f) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      cfg.format = f == "json" ? OutputFormat::Json : f == "csv" ? OutputFormat::Csv : OutputFormat::Table;
    } else if (report->parsed()) {
      cfg.format = OutputFormat::Json;
    }
    cfg.output_path = out_path;
    try {
      cfg.validate();
    } catch (const InvalidSpec& e) {
      throw UsageError(e.what());
    }

    std::ostringstream buffer;
    int code = kExitOk;
    if (stars->parsed()) {
      code = cmd_stars(cfg, buffer);
    } else if (certify->parsed()) {
      code = cmd_certify(cfg, winding, fold, buffer);
    } else if (homology->parsed()) {
      code = cmd_homology(cfg, query, buffer);
    } else if (cerf->parsed()) {
      code = cmd_cerf(cfg, svg_path, buffer);
    } else if (report->parsed()) {
      code = cmd_report(cfg, buffer);
    }

    if (cfg.output_path) {
      std::ofstream f(*cfg.output_path, std::ios::binary);
      if (!f) throw Error("cannot write " + *cfg.output_path);
      f << buffer.str();
    } else {
      std::cout << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}
