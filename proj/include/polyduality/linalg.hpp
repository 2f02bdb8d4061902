#ifndef POLYDUALITY_LINALG_HPP
#define POLYDUALITY_LINALG_HPP

// Small dense kernels: cyclic Jacobi eigenvalues, inertia counting, and the
// projected (constrained) Hessian used by every Morse-index computation.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace polyduality {

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  int sweeps = 0;
  bool converged = false;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below
/// rel_threshold * ||A||_F (an upper bound for the spectral radius).
inline JacobiResult jacobi_eigenvalues(Eigen::MatrixXd a, double rel_threshold = 1e-12,
                                       int max_sweeps = 30) {
  const Eigen::Index n = a.rows();
  JacobiResult result;
  const double scale = a.norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  if (scale == 0.0) {
    result.converged = true;
  } else {
    for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
      if (off_norm() <= rel_threshold * scale) {
        result.converged = true;
        break;
      }
      if (sweep == max_sweeps) break;
      result.sweeps = sweep + 1;
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          // symmetric Schur 2x2: choose (c, s) zeroing a(p,q)
          const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          for (Eigen::Index k = 0; k < n; ++k) {
            const double akp = a(k, p);
            const double akq = a(k, q);
            a(k, p) = c * akp - s * akq;
            a(k, q) = s * akp + c * akq;
          }
          for (Eigen::Index k = 0; k < n; ++k) {
            const double apk = a(p, k);
            const double aqk = a(q, k);
            a(p, k) = c * apk - s * aqk;
            a(q, k) = s * apk + c * aqk;
          }
        }
      }
    }
  }

  result.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) result.eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

/// (negative, zero, positive) eigenvalue counts; zero means |eig| <= tol * rho.
struct Inertia {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  double spectral_radius = 0.0;
};

inline Inertia inertia(std::span<const double> eigenvalues, double rel_tol) {
  Inertia in;
  for (double e : eigenvalues) in.spectral_radius = std::max(in.spectral_radius, std::abs(e));
  const double cut = rel_tol * in.spectral_radius;
  for (double e : eigenvalues) {
    if (e < -cut) {
      ++in.negative;
    } else if (e > cut) {
      ++in.positive;
    } else {
      ++in.zero;
    }
  }
  return in;
}

/// Orthonormal basis (as columns) of the orthogonal complement of
/// span(directions) in R^dim. Numerically dependent directions count once.
inline Eigen::MatrixXd orthogonal_complement(Eigen::Index dim,
                                             std::span<const Eigen::VectorXd> directions,
                                             double rank_tol = 1e-10) {
  if (directions.empty()) return Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd span_mat(dim, static_cast<Eigen::Index>(directions.size()));
  for (std::size_t k = 0; k < directions.size(); ++k) {
    const double nrm = directions[k].norm();
    span_mat.col(static_cast<Eigen::Index>(k)) =
        nrm > 0.0 ? Eigen::VectorXd(directions[k] / nrm) : Eigen::VectorXd::Zero(dim);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span_mat);
  qr.setThreshold(rank_tol);
  const Eigen::Index rank = qr.rank();
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  return q.rightCols(dim - rank);
}

/// The quadratic form `hessian` restricted to the orthogonal complement of
/// `constraints`, expressed in an orthonormal basis of that complement.
inline Eigen::MatrixXd restrict_form(const Eigen::MatrixXd& hessian,
                                     std::span<const Eigen::VectorXd> constraints) {
  const Eigen::MatrixXd basis = orthogonal_complement(hessian.rows(), constraints);
  Eigen::MatrixXd r = basis.transpose() * hessian * basis;
  return 0.5 * (r + r.transpose());
}

}  // namespace polyduality

#endif  // POLYDUALITY_LINALG_HPP
