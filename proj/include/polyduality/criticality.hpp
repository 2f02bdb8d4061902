#ifndef POLYDUALITY_CRITICALITY_HPP
#define POLYDUALITY_CRITICALITY_HPP

// Regular stars and complete folds, their certification as constrained
// critical points, and Morse indices from projected-Hessian inertia.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "polyduality/error.hpp"
#include "polyduality/geometry.hpp"
#include "polyduality/linalg.hpp"

namespace polyduality {

inline constexpr double kDefaultCritTol = 1e-9;
inline constexpr double kDefaultEigTol = 1e-7;

/// A critical family of the area on fixed-perimeter polygons: a regular star
/// with nonzero winding number, or the complete fold (even n only).
struct CriticalClass {
  enum class Kind { Winding, CompleteFold };

  Kind kind = Kind::Winding;
  int winding = 1;  // ignored for folds

  static CriticalClass star(int w) { return {Kind::Winding, w}; }
  static CriticalClass fold() { return {Kind::CompleteFold, 0}; }

  bool is_fold() const { return kind == Kind::CompleteFold; }

  /// -1, 0 (fold) or +1: the sign of the area of the family.
  int area_sign() const {
    if (is_fold()) return 0;
    return winding > 0 ? 1 : -1;
  }

  std::string label() const { return is_fold() ? "fold" : "w=" + std::to_string(winding); }

  friend auto operator<=>(const CriticalClass&, const CriticalClass&) = default;
};

struct StarSpec {
  int n = 3;
  CriticalClass cls;
  double scale = 1.0;  // circumradius; for folds, half the distance between the two points

  void validate() const {
    if (n < 3) throw InvalidSpec("n must be at least 3");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidSpec("scale must be positive");
    if (cls.is_fold()) {
      if (n % 2 != 0) throw InvalidSpec("complete folds exist for even n only");
    } else {
      const int wmax = (n - 1) / 2;
      if (cls.winding == 0 || std::abs(cls.winding) > wmax) {
        throw InvalidSpec("winding " + std::to_string(cls.winding) + " outside 1 <= |w| <= " +
                          std::to_string(wmax) + " for n=" + std::to_string(n));
      }
    }
  }
};

/// Every critical class for n, in no particular order.
inline std::vector<CriticalClass> critical_classes(int n) {
  std::vector<CriticalClass> out;
  for (int w = 1; w <= (n - 1) / 2; ++w) {
    out.push_back(CriticalClass::star(w));
    out.push_back(CriticalClass::star(-w));
  }
  if (n % 2 == 0) out.push_back(CriticalClass::fold());
  return out;
}

/// Vertex k sits at angle 2*pi*w*k/n on the circle of radius `scale`; the
/// fold is the w = n/2 instance, alternating between (r, 0) and (-r, 0).
inline Polygon make_star(const StarSpec& spec) {
  spec.validate();
  const double r = spec.scale;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(spec.n));
  if (spec.cls.is_fold()) {
    for (int k = 0; k < spec.n; ++k) pts.push_back({k % 2 == 0 ? r : -r, 0.0});
    return Polygon(std::move(pts));
  }
  const int w = spec.cls.winding;
  for (int k = 0; k < spec.n; ++k) {
    const int step = (((w * k) % spec.n) + spec.n) % spec.n;
    const double t = 2.0 * std::numbers::pi * step / spec.n;
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return Polygon(std::move(pts));
}

/// Perimeter of the star of circumradius 1.
inline double unit_star_perimeter(int n, const CriticalClass& cls) {
  if (cls.is_fold()) return 2.0 * n;
  return 2.0 * n * std::sin(std::numbers::pi * std::abs(cls.winding) / n);
}

inline double unit_star_area(int n, const CriticalClass& cls) {
  if (cls.is_fold()) return 0.0;
  return 0.5 * n * std::sin(2.0 * std::numbers::pi * cls.winding / n);
}

/// Morse index of the area on fixed-perimeter polygons.
///
/// w > 0: 2n - 2w - 2; w < 0: 2|w| - 2; fold: n - 2.
inline int predicted_index(int n, const CriticalClass& cls) {
  if (cls.is_fold()) return n - 2;
  if (cls.winding > 0) return 2 * n - 2 * cls.winding - 2;
  return 2 * std::abs(cls.winding) - 2;
}

/// (class, index) for all classes, ordered by index.
inline std::vector<std::pair<CriticalClass, int>> index_table(int n) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  std::vector<std::pair<CriticalClass, int>> out;
  for (const auto& c : critical_classes(n)) out.emplace_back(c, predicted_index(n, c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

struct CriticalEntry {
  StarSpec spec;
  CerfPoint point;
  int predicted_index = 0;
};

/// One entry per critical class, scaled to perimeter `pi`, sorted by area.
inline std::vector<CriticalEntry> enumerate_critical(int n, double pi) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  if (!(pi > 0.0)) throw InvalidSpec("perimeter level must be positive");
  std::vector<CriticalEntry> out;
  for (const auto& cls : critical_classes(n)) {
    const double r = pi / unit_star_perimeter(n, cls);
    StarSpec spec{n, cls, r};
    out.push_back({spec, {pi, unit_star_area(n, cls) * r * r}, predicted_index(n, cls)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.point.area < b.point.area; });
  return out;
}

struct CertifyOptions {
  double crit_tol = kDefaultCritTol;  // residual threshold, relative to |grad f| + |grad g|
  double eig_tol = kDefaultEigTol;    // zero-eigenvalue threshold, relative to spectral radius
  double edge_tol = kDefaultEdgeTol;
};

struct CriticalReport {
  double residual = 0.0;
  double residual_threshold = 0.0;
  double multiplier = 0.0;
  int morse_index = 0;
  int nullity = 0;
  int coindex = 0;
  std::vector<double> eigenvalues;
  int working_dimension = 0;
  bool critical = false;  // residual within threshold
  bool jacobi_converged = false;

  bool morse() const { return nullity == 0; }
  bool certified() const { return critical && morse(); }
};

/// Certify P as a critical point of f restricted to a level set of g and
/// compute its Morse index.
///
/// The Hessian of f - lambda*g is restricted to the orthogonal complement of
/// the isometry orbit and of grad g, which has dimension 2n - 4. A report
/// with `critical == false` is returned (not thrown) for non-critical input.
inline CriticalReport certify_critical(const Polygon& p, Functional f, Functional g,
                                       const CertifyOptions& opt = {}) {
  if (f == g) throw Error("certify_critical needs two different functionals");
  const JetReport jf = jet(p, f, opt.edge_tol);
  const JetReport jg = jet(p, g, opt.edge_tol);

  const double gf = jf.gradient.norm();
  const double gg = jg.gradient.norm();
  if (gg == 0.0 || gg <= 1e-12 * gf) {
    throw ZeroConstraintGradient(std::string("gradient of the constraint (") + to_string(g) +
                                 ") vanishes");
  }

  CriticalReport rep;
  rep.multiplier = jf.gradient.dot(jg.gradient) / jg.gradient.squaredNorm();
  rep.residual = (jf.gradient - rep.multiplier * jg.gradient).norm();
  rep.residual_threshold = opt.crit_tol * (gf + gg);
  rep.critical = rep.residual <= rep.residual_threshold;

  std::vector<Eigen::VectorXd> constrained = gauge_directions(p);
  constrained.push_back(jg.gradient);
  const Eigen::MatrixXd lagrangian = jf.hessian - rep.multiplier * jg.hessian;
  const Eigen::MatrixXd restricted = restrict_form(lagrangian, constrained);
  rep.working_dimension = static_cast<int>(restricted.rows());

  const JacobiResult eig = jacobi_eigenvalues(restricted);
  rep.jacobi_converged = eig.converged;
  rep.eigenvalues = eig.eigenvalues;
  const Inertia in = inertia(rep.eigenvalues, opt.eig_tol);
  rep.morse_index = in.negative;
  rep.nullity = in.zero;
  rep.coindex = in.positive;
  return rep;
}

/// Signed 0/+-1 pattern of the second-order part of area/perimeter^2 at a
/// complete fold, in the edge coordinates b_1..b_{n-1} ordered
/// (b_1x, b_1y, b_2x, ...). It is the form sum_k b_k x b_{k+1}.
struct FoldHessian {
  int n = 4;
  std::vector<std::vector<int>> matrix;
};

inline FoldHessian fold_hessian_pattern(int n) {
  if (n % 2 != 0) throw OddN("the complete fold exists for even n only");
  if (n < 4) throw InvalidSpec("n must be at least 4");
  const int edges = n - 1;
  const auto dim = static_cast<std::size_t>(2 * edges);
  FoldHessian h{n, std::vector<std::vector<int>>(dim, std::vector<int>(dim, 0))};
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(edges); ++k) {
    const std::size_t x0 = 2 * k, y0 = 2 * k + 1, x1 = 2 * k + 2, y1 = 2 * k + 3;
    h.matrix[x0][y1] = h.matrix[y1][x0] = 1;
    h.matrix[y0][x1] = h.matrix[x1][y0] = -1;
  }
  return h;
}

/// Exact rank over the rationals (fraction-free Bareiss elimination).
inline int exact_rank(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                             static_cast<__int128>(m[i][c]) * m[r][j];
        m[i][j] = static_cast<std::int64_t>(num / prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

inline int fold_hessian_rank(const FoldHessian& h) {
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(h.matrix.size());
  for (const auto& row : h.matrix) m.emplace_back(row.begin(), row.end());
  return exact_rank(std::move(m));
}

}  // namespace polyduality

#endif  // POLYDUALITY_CRITICALITY_HPP
