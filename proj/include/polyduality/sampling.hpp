#ifndef POLYDUALITY_SAMPLING_HPP
#define POLYDUALITY_SAMPLING_HPP

// Reproducible pseudo-random inputs: polygon clouds and tangent quadratic pairs.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "polyduality/geometry.hpp"

namespace polyduality {

inline constexpr std::uint64_t kDefaultSeed = 20200070;

/// Independent generator for (seed, stream).
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Vertices uniform in [-1, 1]^2.
inline Polygon random_polygon(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) {
    p.x = u(rng);
    p.y = u(rng);
  }
  return Polygon(std::move(pts));
}

/// Quadratic germs f(x) = <v, x> + x'Ax/2 and g(x) = s*k*<v, x> + x'Bx/2 on
/// R^{N+1}: both vanish at 0 with parallel gradients (codirected iff s > 0).
struct QuadraticPair {
  int ambient_dim = 3;  // N + 1
  Eigen::VectorXd v;
  double gradient_ratio = 1.0;  // s * k
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;

  double f(const Eigen::VectorXd& x) const { return v.dot(x) + 0.5 * x.dot(a * x); }
  double g(const Eigen::VectorXd& x) const {
    return gradient_ratio * v.dot(x) + 0.5 * x.dot(b * x);
  }
};

inline Eigen::MatrixXd random_symmetric(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = nd(rng);
  return 0.5 * (m + m.transpose());
}

inline QuadraticPair random_quadratic_pair(int n_hyper, bool codirected, std::mt19937_64& rng) {
  const int dim = n_hyper + 1;
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ratio(0.5, 2.0);
  QuadraticPair q;
  q.ambient_dim = dim;
  q.v = Eigen::VectorXd(dim);
  for (int i = 0; i < dim; ++i) q.v(i) = nd(rng);
  q.gradient_ratio = (codirected ? 1.0 : -1.0) * ratio(rng);
  q.a = random_symmetric(dim, rng);
  q.b = random_symmetric(dim, rng);
  return q;
}

}  // namespace polyduality

#endif  // POLYDUALITY_SAMPLING_HPP
