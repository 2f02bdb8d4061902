#ifndef POLYDUALITY_IO_HPP
#define POLYDUALITY_IO_HPP

// JSON / CSV / text encodings of the library's value types.

#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "polyduality/criticality.hpp"
#include "polyduality/duality.hpp"
#include "polyduality/error.hpp"
#include "polyduality/geometry.hpp"
#include "polyduality/stratification.hpp"
#include "polyduality/topology.hpp"

namespace polyduality {

using json = nlohmann::json;

// Polygons ------------------------------------------------------------------

inline json to_json(const Polygon& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back({v.x, v.y});
  return {{"n", p.size()}, {"vertices", verts}};
}

inline Polygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) {
    throw InvalidPolygon("polygon JSON needs a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw InvalidPolygon("each vertex must be [x, y]");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  if (j.contains("n") && j.at("n").get<std::size_t>() != pts.size()) {
    throw InvalidPolygon("\"n\" does not match the number of vertices");
  }
  return Polygon(std::move(pts));
}

/// One vertex per line, "x,y", full double precision.
inline std::string to_csv(const Polygon& p) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& v : p.vertices()) os << v.x << ',' << v.y << '\n';
  return os.str();
}

inline Polygon polygon_from_csv(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidPolygon("CSV line without comma: " + line);
    try {
      pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw InvalidPolygon("CSV line is not numeric: " + line);
    }
  }
  return Polygon(std::move(pts));
}

// Criticality ---------------------------------------------------------------

inline json to_json(const CriticalReport& r) {
  return {{"residual", r.residual},   {"multiplier", r.multiplier}, {"index", r.morse_index},
          {"nullity", r.nullity},     {"coindex", r.coindex},       {"dim", r.working_dimension},
          {"eigenvalues", r.eigenvalues}};
}

inline json to_json(const FoldHessian& h) { return h.matrix; }

// Stratification ------------------------------------------------------------

inline json to_json(const CerfDiagram& d) {
  json curves = json::array();
  for (const auto& c : d.curves) curves.push_back({{"index", c.morse_index}, {"c", c.c}});
  json chambers = json::array();
  for (const auto& w : d.chambers) {
    chambers.push_back({{"label", w.label}, {"c_low", w.c_low}, {"c_high", w.c_high}});
  }
  return {{"curves", curves}, {"chambers", chambers}};
}

// Topology ------------------------------------------------------------------

inline json to_json(const HomologyTable& t) {
  json ranks = json::object();
  for (const auto& [j, r] : t.ranks) ranks[std::to_string(j)] = r;
  return {{"dim", t.top_degree}, {"ranks", ranks}};
}

inline HomologyTable homology_from_json(const json& j) {
  HomologyTable t;
  t.top_degree = j.at("dim").get<int>();
  for (const auto& [key, val] : j.at("ranks").items()) t.ranks[std::stoi(key)] = val.get<int>();
  return t;
}

inline std::string to_csv(const HomologyTable& t) {
  std::ostringstream os;
  os << "j,rank\n";
  for (const auto& [j, r] : t.ranks) os << j << ',' << r << '\n';
  return os.str();
}

namespace detail {

inline std::string group(int rank) {
  if (rank == 0) return "0";
  std::string s = "Z";
  for (int k = 1; k < rank; ++k) s += "+Z";
  return s;
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

/// Degree column plus H column, top degree first.
inline std::string to_text(const HomologyTable& t, const std::string& title = "H_j") {
  std::ostringstream os;
  os << "| j  | " << detail::pad(title, 6) << " |\n";
  for (auto it = t.ranks.rbegin(); it != t.ranks.rend(); ++it) {
    os << "| " << detail::pad(std::to_string(it->first), 2) << " | "
       << detail::pad(detail::group(it->second), 6) << " |\n";
  }
  return os.str();
}

/// Full Mayer-Vietoris layout: H(A n B), H(A)+H(B), H(A u B), top degree first.
inline std::string to_text(const MayerVietorisSolution& s) {
  std::ostringstream os;
  os << "| j  | H(A n B) | H(A)+H(B) | H(A u B) |\n";
  for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) {
    std::string sum;
    if (it->a == 0 && it->b == 0) {
      sum = "0";
    } else {
      sum = detail::group(it->a) + "+" + detail::group(it->b);
    }
    os << "| " << detail::pad(std::to_string(it->degree), 2) << " | "
       << detail::pad(detail::group(s.intersection.rank(it->degree)), 8) << " | "
       << detail::pad(sum, 9) << " | " << detail::pad(detail::group(it->united), 8) << " |\n";
  }
  return os.str();
}

// Duality -------------------------------------------------------------------

inline json to_json(const DualIndexReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"w", row.winding},
                    {"m", row.perimeter_index},
                    {"M", row.area_index},
                    {"perimeter_residual", row.perimeter_residual},
                    {"area_residual", row.area_residual},
                    {"certified", row.certified},
                    {"identity_holds", row.identity_holds}});
  }
  return {{"n", r.n}, {"sign", r.sign}, {"rows", rows}, {"sign_check", r.sign_check},
          {"all_pass", r.all_pass}};
}

inline std::string to_csv(const DualIndexReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "w,m,M,perimeter_residual,area_residual\n";
  for (const auto& row : r.rows) {
    os << row.winding << ',' << row.perimeter_index << ',' << row.area_index << ','
       << row.perimeter_residual << ',' << row.area_residual << '\n';
  }
  return os.str();
}

inline json to_json(const LevelPreservationReport& r) {
  return {{"n", r.n},
          {"a", r.a},
          {"pi", r.pi},
          {"samples", r.samples},
          {"rejected", r.rejected},
          {"max_deviation", r.max_deviation},
          {"tol", r.tol},
          {"pass", r.pass}};
}

inline json to_json(const KissingResult& k) {
  return {{"M", k.index_f_on_g},
          {"m", k.index_g_on_f},
          {"N", k.dimension},
          {"codirected", k.codirected},
          {"relation_holds", k.relation_holds()}};
}

}  // namespace polyduality

#endif  // POLYDUALITY_IO_HPP
