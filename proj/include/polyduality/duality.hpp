#ifndef POLYDUALITY_DUALITY_HPP
#define POLYDUALITY_DUALITY_HPP

// Scaling duality between polygons of fixed area and of fixed perimeter, the
// induced index duality at stars, and the index relation for two tangent
// ("kissing") hypersurfaces.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyduality/criticality.hpp"
#include "polyduality/error.hpp"
#include "polyduality/geometry.hpp"
#include "polyduality/linalg.hpp"
#include "polyduality/sampling.hpp"

namespace polyduality {

/// Rescale P to perimeter `target_perimeter`.
inline Polygon psi(const Polygon& p, double target_perimeter) {
  if (!(target_perimeter > 0.0)) throw NonPositiveScale("target perimeter must be positive");
  return scale(p, target_perimeter / perimeter(p));
}

/// Rescale P to oriented area `target_area`; the signs must agree.
inline Polygon psi_inv(const Polygon& p, double target_area) {
  const double a = area(p);
  if (a == 0.0 || target_area == 0.0 || (a > 0.0) != (target_area > 0.0)) {
    throw ZeroArea("psi_inv needs nonzero areas of the same sign");
  }
  return scale(p, std::sqrt(target_area / a));
}

/// Level correspondence p -> a * pi^2 / p^2 from perimeter levels on C_a to
/// area levels on C_pi. Decreasing for a > 0, increasing for a < 0.
struct LevelCorrespondence {
  double pi = 1.0;
  double a = 1.0;

  enum class Direction { Decreasing, Increasing };
  Direction direction() const { return a > 0.0 ? Direction::Decreasing : Direction::Increasing; }
};

inline double level_map(const LevelCorrespondence& corr, double p) {
  if (!(p > 0.0)) throw NonPositiveLevel("perimeter level must be positive");
  return corr.a * corr.pi * corr.pi / (p * p);
}

struct LevelPreservationReport {
  int n = 0;
  double a = 0.0;
  double pi = 0.0;
  int samples = 0;
  int rejected = 0;
  double max_deviation = 0.0;  // relative
  double tol = 0.0;
  bool pass = false;
};

/// Sample C_a (random clouds rescaled by psi_inv) and check that psi carries
/// perimeter level p to area level a*pi^2/p^2.
inline LevelPreservationReport verify_level_preservation(int n, double a, double pi, int samples,
                                                         double tol = 1e-12,
                                                         std::uint64_t seed = kDefaultSeed) {
  if (a == 0.0) throw ZeroArea("level preservation needs a nonzero area level");
  LevelPreservationReport rep{n, a, pi, 0, 0, 0.0, tol, false};
  auto rng = make_rng(seed, static_cast<std::uint64_t>(n));
  const LevelCorrespondence corr{pi, a};
  while (rep.samples < samples) {
    Polygon cloud = random_polygon(n, rng);
    const double raw = area(cloud);
    if (std::abs(raw) < 1e-6) {
      ++rep.rejected;
      continue;
    }
    if ((raw > 0.0) != (a > 0.0)) cloud = reflect(cloud);
    const Polygon q = psi_inv(cloud, a);
    const double expected = level_map(corr, perimeter(q));
    const double got = area(psi(q, pi));
    rep.max_deviation = std::max(rep.max_deviation, std::abs(got - expected) / std::abs(expected));
    ++rep.samples;
  }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

struct DualIndexRow {
  int winding = 0;
  int perimeter_index = 0;  // m: perimeter on fixed area
  int area_index = 0;       // M: area on fixed perimeter
  double perimeter_residual = 0.0;
  double area_residual = 0.0;
  bool certified = false;
  bool identity_holds = false;
};

struct DualIndexReport {
  int n = 0;
  int sign = 1;
  std::vector<DualIndexRow> rows;
  bool sign_check = true;  // each star's area sign equals `sign`
  bool all_pass = false;
};

/// For every star of the given winding sign, compute M (area on C_pi) and m
/// (perimeter on C_a) by inertia and check m + M = 2n - 4 (sign > 0) or
/// m = M (sign < 0).
inline DualIndexReport dual_index_check(int n, int sign, const CertifyOptions& opt = {}) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  if (sign != 1 && sign != -1) throw InvalidSpec("sign must be +1 or -1");
  DualIndexReport rep{n, sign, {}, true, true};
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const CriticalClass cls = CriticalClass::star(sign * k);
    const double r_pi = 1.0 / unit_star_perimeter(n, cls);
    const double r_a = std::sqrt(1.0 / std::abs(unit_star_area(n, cls)));
    const Polygon on_pi = make_star({n, cls, r_pi});
    const Polygon on_a = make_star({n, cls, r_a});
    if ((area(on_a) > 0.0 ? 1 : -1) != sign) rep.sign_check = false;

    const CriticalReport big = certify_critical(on_pi, Functional::Area, Functional::Perimeter, opt);
    const CriticalReport small =
        certify_critical(on_a, Functional::Perimeter, Functional::Area, opt);
    DualIndexRow row;
    row.winding = cls.winding;
    row.area_index = big.morse_index;
    row.perimeter_index = small.morse_index;
    row.area_residual = big.residual;
    row.perimeter_residual = small.residual;
    row.certified = big.certified() && small.certified();
    row.identity_holds = sign > 0 ? row.perimeter_index + row.area_index == 2 * n - 4
                                  : row.perimeter_index == row.area_index;
    rep.all_pass = rep.all_pass && row.certified && row.identity_holds;
    rep.rows.push_back(row);
  }
  rep.all_pass = rep.all_pass && rep.sign_check;
  return rep;
}

/// Twice-differentiable scalar field. Missing derivatives are replaced by
/// central finite differences.
struct ScalarField {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

inline constexpr double kFiniteDifferenceStep = 1e-4;

inline Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& x, double h = kFiniteDifferenceStep) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd y = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    y(i) = x(i) + h;
    const double fp = f(y);
    y(i) = x(i) - h;
    const double fm = f(y);
    y(i) = x(i);
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

inline Eigen::MatrixXd fd_hessian(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x, double h = kFiniteDifferenceStep) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd hess(n, n);
  Eigen::VectorXd y = x;
  auto at = [&](Eigen::Index i, double di, Eigen::Index j, double dj) {
    y = x;
    y(i) += di;
    y(j) += dj;
    return f(y);
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) /
                       (4.0 * h * h);
      hess(i, j) = hess(j, i) = v;
    }
  }
  return hess;
}

struct KissingResult {
  int index_f_on_g = 0;  // M: index of f restricted to {g = 0}
  int index_g_on_f = 0;  // m: index of g restricted to {f = 0}
  int dimension = 0;     // N: dimension of the common tangent space
  bool codirected = false;

  /// M + m = N when codirected, M = m otherwise.
  bool relation_holds() const {
    return codirected ? index_f_on_g + index_g_on_f == dimension : index_f_on_g == index_g_on_f;
  }
};

struct KissingOptions {
  double tol = 1e-6;      // level and tangency tolerance
  double eig_tol = kDefaultEigTol;
  std::vector<Eigen::VectorXd> null_directions;  // e.g. gauge directions, projected out
};

/// Mutual restricted Morse indices of two hypersurfaces {f = 0} and {g = 0}
/// tangent at x0.
inline KissingResult kissing_index_check(const ScalarField& f, const ScalarField& g,
                                         const Eigen::VectorXd& x0,
                                         const KissingOptions& opt = {}) {
  if (std::abs(f.value(x0)) > opt.tol || std::abs(g.value(x0)) > opt.tol) {
    throw NotTangent("x0 is not on both level sets");
  }
  const Eigen::VectorXd gf = f.gradient ? f.gradient(x0) : fd_gradient(f.value, x0);
  const Eigen::VectorXd gg = g.gradient ? g.gradient(x0) : fd_gradient(g.value, x0);
  const double nf = gf.norm();
  const double ng = gg.norm();
  if (nf == 0.0 || ng == 0.0) throw NotTangent("a gradient vanishes at x0");
  const double cosine = gf.dot(gg) / (nf * ng);
  if (1.0 - std::abs(cosine) > opt.tol) throw NotTangent("gradients are not parallel at x0");

  const Eigen::MatrixXd hf = f.hessian ? f.hessian(x0) : fd_hessian(f.value, x0);
  const Eigen::MatrixXd hg = g.hessian ? g.hessian(x0) : fd_hessian(g.value, x0);

  auto restricted_inertia = [&](const Eigen::MatrixXd& h_main, const Eigen::MatrixXd& h_con,
                                const Eigen::VectorXd& grad_main, const Eigen::VectorXd& grad_con) {
    const double lambda = grad_main.dot(grad_con) / grad_con.squaredNorm();
    std::vector<Eigen::VectorXd> dirs = opt.null_directions;
    dirs.push_back(grad_con);
    const Eigen::MatrixXd r = restrict_form(h_main - lambda * h_con, dirs);
    const JacobiResult eig = jacobi_eigenvalues(r);
    const Inertia in = inertia(eig.eigenvalues, opt.eig_tol);
    if (in.zero != 0) throw DegenerateRestriction("restricted Hessian is degenerate");
    return std::pair{in.negative, static_cast<int>(r.rows())};
  };

  const auto [big_m, dim_f] = restricted_inertia(hf, hg, gf, gg);
  const auto [small_m, dim_g] = restricted_inertia(hg, hf, gg, gf);
  (void)dim_g;
  return {big_m, small_m, dim_f, cosine > 0.0};
}

/// ScalarField for area - level or perimeter - level on flat polygon
/// coordinates, with analytic derivatives.
inline ScalarField polygon_field(Functional which, double level, double edge_tol = kDefaultEdgeTol) {
  ScalarField s;
  s.value = [which, level](const Eigen::VectorXd& x) {
    const Polygon p = Polygon::from_flat(x);
    return (which == Functional::Area ? area(p) : perimeter(p)) - level;
  };
  s.gradient = [which, edge_tol](const Eigen::VectorXd& x) {
    return jet(Polygon::from_flat(x), which, edge_tol).gradient;
  };
  s.hessian = [which, edge_tol](const Eigen::VectorXd& x) {
    return jet(Polygon::from_flat(x), which, edge_tol).hessian;
  };
  return s;
}

}  // namespace polyduality

#endif  // POLYDUALITY_DUALITY_HPP
