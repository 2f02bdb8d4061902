#ifndef POLYDUALITY_GEOMETRY_HPP
#define POLYDUALITY_GEOMETRY_HPP

// Planar n-gons as raw vertex lists, the two functionals (oriented area and
// perimeter) with analytic jets, and the isometry / scaling actions.
//
// Flat coordinates are ordered (x_1, y_1, x_2, y_2, ..., x_n, y_n).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "polyduality/error.hpp"

namespace polyduality {

inline constexpr double kDefaultEdgeTol = 1e-9;
inline constexpr double kDefaultEqualityTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered vertex list of a planar n-gon, n >= 3, not all vertices equal.
///
/// The polygon is kept as a raw representative; equality modulo
/// orientation-preserving isometries goes through canonical_form().
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw InvalidPolygon("polygon needs at least 3 vertices, got " +
                           std::to_string(vertices_.size()));
    }
    bool all_equal = true;
    for (const auto& p : vertices_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw InvalidPolygon("polygon has a non-finite coordinate");
      }
      if (!(p == vertices_.front())) all_equal = false;
    }
    if (all_equal) throw InvalidPolygon("all vertices coincide");
  }

  static Polygon from_flat(const Eigen::VectorXd& flat) {
    if (flat.size() % 2 != 0) throw InvalidPolygon("flat coordinate vector has odd length");
    std::vector<Point> pts(static_cast<std::size_t>(flat.size() / 2));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pts[i] = {flat(2 * static_cast<Eigen::Index>(i)), flat(2 * static_cast<Eigen::Index>(i) + 1)};
    }
    return Polygon(std::move(pts));
  }

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// Vertex with cyclic index.
  const Point& at_cyclic(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  Eigen::VectorXd flat() const {
    Eigen::VectorXd v(2 * static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      v(2 * static_cast<Eigen::Index>(i)) = vertices_[i].x;
      v(2 * static_cast<Eigen::Index>(i) + 1) = vertices_[i].y;
    }
    return v;
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// A point (perimeter, area) in the half-plane R_{>0} x R.
struct CerfPoint {
  double perimeter = 0.0;
  double area = 0.0;
};

enum class Functional { Area, Perimeter };

inline const char* to_string(Functional f) {
  return f == Functional::Area ? "area" : "perimeter";
}

struct JetReport {
  Functional functional = Functional::Area;
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Oriented (shoelace) area; positive for counter-clockwise traversal.
inline double area(const Polygon& p) {
  double twice = 0.0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

inline double edge_length(const Polygon& p, std::size_t i) {
  const Point& a = p[i];
  const Point& b = p[(i + 1) % p.size()];
  return std::hypot(b.x - a.x, b.y - a.y);
}

inline double perimeter(const Polygon& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += edge_length(p, i);
  return total;
}

inline CerfPoint phi(const Polygon& p) { return {perimeter(p), area(p)}; }

inline JetReport jet_area(const Polygon& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  JetReport jet;
  jet.functional = Functional::Area;
  jet.value = area(p);
  jet.gradient = Eigen::VectorXd::Zero(2 * n);
  jet.hessian = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point& next = p.at_cyclic(i + 1);
    const Point& prev = p.at_cyclic(i - 1);
    jet.gradient(2 * i) = 0.5 * (next.y - prev.y);
    jet.gradient(2 * i + 1) = 0.5 * (prev.x - next.x);

    // 2A = sum_i x_i y_{i+1} - x_{i+1} y_i
    const Eigen::Index xi = 2 * i;
    const Eigen::Index y_next = 2 * ((i + 1) % n) + 1;
    const Eigen::Index y_prev = 2 * ((i + n - 1) % n) + 1;
    jet.hessian(xi, y_next) += 0.5;
    jet.hessian(y_next, xi) += 0.5;
    jet.hessian(xi, y_prev) -= 0.5;
    jet.hessian(y_prev, xi) -= 0.5;
  }
  return jet;
}

/// Analytic jet of the perimeter. Throws DegenerateEdge when an edge is
/// shorter than edge_tol, where the perimeter is not differentiable.
inline JetReport jet_perimeter(const Polygon& p, double edge_tol = kDefaultEdgeTol) {
  const auto n = static_cast<Eigen::Index>(p.size());
  JetReport jet;
  jet.functional = Functional::Perimeter;
  jet.value = 0.0;
  jet.gradient = Eigen::VectorXd::Zero(2 * n);
  jet.hessian = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point& a = p.at_cyclic(i);
    const Point& b = p.at_cyclic(i + 1);
    const Eigen::Vector2d e(b.x - a.x, b.y - a.y);
    const double len = e.norm();
    if (len < edge_tol) {
      throw DegenerateEdge("edge " + std::to_string(i) + " has length " + std::to_string(len) +
                           " below edge_tol");
    }
    jet.value += len;
    const Eigen::Vector2d u = e / len;
    const Eigen::Index ia = 2 * i;
    const Eigen::Index ib = 2 * ((i + 1) % n);
    jet.gradient.segment<2>(ia) -= u;
    jet.gradient.segment<2>(ib) += u;

    const Eigen::Matrix2d k = (Eigen::Matrix2d::Identity() - u * u.transpose()) / len;
    jet.hessian.block<2, 2>(ia, ia) += k;
    jet.hessian.block<2, 2>(ib, ib) += k;
    jet.hessian.block<2, 2>(ia, ib) -= k;
    jet.hessian.block<2, 2>(ib, ia) -= k;
  }
  return jet;
}

inline JetReport jet(const Polygon& p, Functional f, double edge_tol = kDefaultEdgeTol) {
  return f == Functional::Area ? jet_area(p) : jet_perimeter(p, edge_tol);
}

/// Rotate about the origin by `angle`, then translate.
inline Polygon isometry_apply(const Polygon& p, double angle, Point translation) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) {
    out.push_back({c * v.x - s * v.y + translation.x, s * v.x + c * v.y + translation.y});
  }
  return Polygon(std::move(out));
}

/// Mirror image across the x-axis: keeps perimeter, negates area.
inline Polygon reflect(const Polygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back({v.x, -v.y});
  return Polygon(std::move(out));
}

/// (p_1, ..., p_n) -> (p_2, ..., p_n, p_1)
inline Polygon cyclic_shift(const Polygon& p) {
  std::vector<Point> out(p.vertices().begin() + 1, p.vertices().end());
  out.push_back(p[0]);
  return Polygon(std::move(out));
}

inline Polygon scale(const Polygon& p, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw NonPositiveScale("scale factor must be positive and finite");
  }
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back({lambda * v.x, lambda * v.y});
  return Polygon(std::move(out));
}

/// Representative of the isometry class: centroid at the origin and the
/// first vertex farther than edge_tol from it on the positive x-axis.
inline Polygon canonical_form(const Polygon& p, double edge_tol = kDefaultEdgeTol) {
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& v : p.vertices()) {
    cx += v.x;
    cy += v.y;
  }
  cx /= static_cast<double>(p.size());
  cy /= static_cast<double>(p.size());

  std::vector<Point> centered;
  centered.reserve(p.size());
  for (const auto& v : p.vertices()) centered.push_back({v.x - cx, v.y - cy});

  for (const auto& v : centered) {
    if (std::hypot(v.x, v.y) > edge_tol) {
      const double angle = -std::atan2(v.y, v.x);
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      std::vector<Point> out;
      out.reserve(centered.size());
      for (const auto& w : centered) out.push_back({c * w.x - s * w.y, s * w.x + c * w.y});
      return Polygon(std::move(out));
    }
  }
  throw Unnormalizable("every vertex lies within edge_tol of the centroid");
}

inline double max_abs_difference(const Polygon& a, const Polygon& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].x - b[i].x), std::abs(a[i].y - b[i].y)});
  }
  return worst;
}

/// True when the two polygons differ by an orientation-preserving isometry.
inline bool congruent(const Polygon& a, const Polygon& b, double tol = kDefaultEqualityTol,
                      double edge_tol = kDefaultEdgeTol) {
  return max_abs_difference(canonical_form(a, edge_tol), canonical_form(b, edge_tol)) <= tol;
}

/// Tangent vectors of the isometry orbit at p: x-translation, y-translation,
/// infinitesimal rotation about the origin.
inline std::vector<Eigen::VectorXd> gauge_directions(const Polygon& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::VectorXd tx = Eigen::VectorXd::Zero(2 * n);
  Eigen::VectorXd ty = Eigen::VectorXd::Zero(2 * n);
  Eigen::VectorXd rot(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    tx(2 * i) = 1.0;
    ty(2 * i + 1) = 1.0;
    rot(2 * i) = -p[static_cast<std::size_t>(i)].y;
    rot(2 * i + 1) = p[static_cast<std::size_t>(i)].x;
  }
  return {tx, ty, rot};
}

}  // namespace polyduality

#endif  // POLYDUALITY_GEOMETRY_HPP
