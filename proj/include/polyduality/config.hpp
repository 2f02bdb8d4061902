#ifndef POLYDUALITY_CONFIG_HPP
#define POLYDUALITY_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include "polyduality/criticality.hpp"
#include "polyduality/error.hpp"
#include "polyduality/sampling.hpp"
#include "polyduality/stratification.hpp"

namespace polyduality {

enum class OutputFormat { Json, Csv, Table };

struct RunConfig {
  int n = 7;
  double edge_tol = kDefaultEdgeTol;
  double crit_tol = kDefaultCritTol;
  double eig_tol = kDefaultEigTol;
  double curve_tol = kDefaultCurveTol;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> output_path;

  // Cerf diagram presentation.
  double pi_min = 0.1;
  double pi_max = 2.0;
  int svg_samples = 256;

  CertifyOptions certify_options() const { return {crit_tol, eig_tol, edge_tol}; }

  void validate() const {
    if (n < 3) throw InvalidSpec("n must be at least 3");
    if (!(edge_tol > 0.0) || !(crit_tol > 0.0) || !(eig_tol > 0.0) || !(curve_tol > 0.0)) {
      throw InvalidSpec("tolerances must be positive");
    }
    if (!(pi_min > 0.0) || !(pi_max > pi_min)) throw InvalidSpec("invalid perimeter range");
    if (svg_samples < 2) throw InvalidSpec("svg_samples must be at least 2");
  }
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Apply `key = value` lines ('#' starts a comment) on top of `cfg`.
inline void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidSpec(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "edge_tol") {
        cfg.edge_tol = std::stod(value);
      } else if (key == "crit_tol") {
        cfg.crit_tol = std::stod(value);
      } else if (key == "eig_tol") {
        cfg.eig_tol = std::stod(value);
      } else if (key == "curve_tol") {
        cfg.curve_tol = std::stod(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "pi_min") {
        cfg.pi_min = std::stod(value);
      } else if (key == "pi_max") {
        cfg.pi_max = std::stod(value);
      } else if (key == "svg_samples") {
        cfg.svg_samples = std::stoi(value);
      } else {
        throw InvalidSpec(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw InvalidSpec(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
}

}  // namespace polyduality

#endif  // POLYDUALITY_CONFIG_HPP
