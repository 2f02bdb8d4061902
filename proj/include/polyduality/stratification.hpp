#ifndef POLYDUALITY_STRATIFICATION_HPP
#define POLYDUALITY_STRATIFICATION_HPP

// Discriminant curves area = c * perimeter^2 of the map P -> (perimeter, area)
// and the chambers W_1, W_3, ... between them.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polyduality/criticality.hpp"
#include "polyduality/error.hpp"
#include "polyduality/geometry.hpp"

namespace polyduality {

inline constexpr double kDefaultCurveTol = 1e-10;

struct DiscriminantCurve {
  int morse_index = 0;
  double c = 0.0;
  CriticalClass source;
};

/// c = area / perimeter^2 of the critical family, in closed form.
inline double discriminant_constant(int n, const CriticalClass& cls) {
  if (cls.is_fold()) return 0.0;
  const double s = std::sin(std::numbers::pi * std::abs(cls.winding) / n);
  return std::sin(2.0 * std::numbers::pi * cls.winding / n) / (8.0 * n * s * s);
}

/// All discriminant curves for n, sorted ascending by c.
inline std::vector<DiscriminantCurve> discriminant_constants(int n) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  std::vector<DiscriminantCurve> out;
  for (const auto& cls : critical_classes(n)) {
    out.push_back({predicted_index(n, cls), discriminant_constant(n, cls), cls});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
  return out;
}

/// Stratum of a point of the (perimeter, area) half-plane.
///
/// ZeroArea names the line a = 0 for topology queries; classify() never
/// returns it (the line is Curve(n-2) for even n and Chamber(n-2) for odd n).
struct RegionLabel {
  enum class Kind { Outside, Curve, Chamber, ZeroArea };

  Kind kind = Kind::Outside;
  int index = 0;

  static RegionLabel outside() { return {Kind::Outside, 0}; }
  static RegionLabel curve(int i) { return {Kind::Curve, i}; }
  static RegionLabel chamber(int i) { return {Kind::Chamber, i}; }
  static RegionLabel zero_area() { return {Kind::ZeroArea, 0}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Outside:
        return "outside";
      case Kind::Curve:
        return "D" + std::to_string(index);
      case Kind::Chamber:
        return "W" + std::to_string(index);
      case Kind::ZeroArea:
        return "zero-area";
    }
    return "?";
  }

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// The stratum containing the zero-area line for n.
inline RegionLabel resolve_zero_area(int n) {
  return n % 2 == 0 ? RegionLabel::curve(n - 2) : RegionLabel::chamber(n - 2);
}

/// Every label with a nonempty fiber: all chambers, all curves, zero-area.
inline std::vector<RegionLabel> all_region_labels(int n) {
  std::vector<RegionLabel> out;
  for (int i = 0; i <= 2 * n - 4; ++i) {
    out.push_back(i % 2 == 0 ? RegionLabel::curve(i) : RegionLabel::chamber(i));
  }
  out.push_back(RegionLabel::zero_area());
  return out;
}

inline RegionLabel classify(int n, const CerfPoint& point, double tol = kDefaultCurveTol) {
  if (!(point.perimeter > 0.0)) throw InvalidSpec("perimeter must be positive");
  const double c = point.area / (point.perimeter * point.perimeter);
  const auto curves = discriminant_constants(n);
  for (const auto& d : curves) {
    if (std::abs(c - d.c) <= tol) return RegionLabel::curve(d.morse_index);
  }
  if (c < curves.front().c || c > curves.back().c) return RegionLabel::outside();
  for (std::size_t k = 0; k + 1 < curves.size(); ++k) {
    if (c > curves[k].c && c < curves[k + 1].c) {
      return RegionLabel::chamber(curves[k].morse_index + 1);
    }
  }
  return RegionLabel::outside();  // unreachable for finite input
}

struct Chamber {
  int label = 1;
  double c_low = 0.0;
  double c_high = 0.0;
};

/// Renderable model of the stratified half-plane over [pi_min, pi_max].
struct CerfDiagram {
  int n = 3;
  double pi_min = 0.1;
  double pi_max = 2.0;
  std::vector<DiscriminantCurve> curves;  // ascending c
  std::vector<Chamber> chambers;          // bottom to top

  bool has_fold_ray() const {
    return std::any_of(curves.begin(), curves.end(),
                       [](const auto& d) { return d.source.is_fold(); });
  }
};

inline CerfDiagram cerf_diagram(int n, double pi_min = 0.1, double pi_max = 2.0) {
  if (!(pi_min > 0.0) || !(pi_max > pi_min)) throw InvalidSpec("invalid perimeter range");
  CerfDiagram d{n, pi_min, pi_max, discriminant_constants(n), {}};
  for (std::size_t k = 0; k + 1 < d.curves.size(); ++k) {
    d.chambers.push_back({d.curves[k].morse_index + 1, d.curves[k].c, d.curves[k + 1].c});
  }
  return d;
}

}  // namespace polyduality

#endif  // POLYDUALITY_STRATIFICATION_HPP
