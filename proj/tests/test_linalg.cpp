#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "polyduality/criticality.hpp"
#include "polyduality/linalg.hpp"
#include "polyduality/sampling.hpp"

using namespace polyduality;

TEST(Jacobi, MatchesEigenSolver) {
  auto rng = make_rng(17);
  for (int dim = 1; dim <= 24; ++dim) {
    const Eigen::MatrixXd a = random_symmetric(dim, rng);
    const JacobiResult j = jacobi_eigenvalues(a);
    ASSERT_TRUE(j.converged) << dim;
    EXPECT_LE(j.sweeps, 30);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(a, Eigen::EigenvaluesOnly);
    for (int k = 0; k < dim; ++k) {
      EXPECT_NEAR(j.eigenvalues[static_cast<std::size_t>(k)], oracle.eigenvalues()(k),
                  1e-10 * std::max(1.0, a.norm()));
    }
  }
}

TEST(Jacobi, DiagonalAndZero) {
  const JacobiResult z = jacobi_eigenvalues(Eigen::MatrixXd::Zero(3, 3));
  EXPECT_TRUE(z.converged);
  EXPECT_EQ(z.eigenvalues, (std::vector<double>{0, 0, 0}));

  Eigen::MatrixXd d = Eigen::Vector3d(3, -1, 2).asDiagonal();
  EXPECT_EQ(jacobi_eigenvalues(d).eigenvalues, (std::vector<double>{-1, 2, 3}));
}

TEST(Inertia, CountsWithRelativeThreshold) {
  const std::vector<double> eig{-2.0, -1e-9, 0.0, 1e-12, 0.5, 4.0};
  const Inertia in = inertia(eig, 1e-7);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.zero, 3);
  EXPECT_EQ(in.positive, 2);
  EXPECT_DOUBLE_EQ(in.spectral_radius, 4.0);
}

TEST(OrthogonalComplement, DimensionAndOrthogonality) {
  auto rng = make_rng(23);
  std::normal_distribution<double> nd;
  for (int dim = 4; dim <= 12; ++dim) {
    std::vector<Eigen::VectorXd> dirs;
    for (int k = 0; k < 3; ++k) {
      Eigen::VectorXd v(dim);
      for (int i = 0; i < dim; ++i) v(i) = nd(rng);
      dirs.push_back(v);
    }
    dirs.push_back(2.0 * dirs[0] - dirs[1]);  // dependent, counts once
    const Eigen::MatrixXd basis = orthogonal_complement(dim, dirs);
    ASSERT_EQ(basis.cols(), dim - 3);
    EXPECT_LE((basis.transpose() * basis - Eigen::MatrixXd::Identity(dim - 3, dim - 3)).norm(), 1e-12);
    for (const auto& v : dirs) EXPECT_LE((basis.transpose() * v).norm(), 1e-10 * v.norm());
  }
}

TEST(ExactRank, AgreesWithFloatingPointRank) {
  auto rng = make_rng(29);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 2 + trial % 7;
    const int cols = 2 + (trial * 3) % 8;
    const int planted = 1 + trial % std::min(rows, cols);
    // product of integer factors has rank <= planted
    Eigen::MatrixXd l(rows, planted), r(planted, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < planted; ++k) l(i, k) = entry(rng);
    for (int k = 0; k < planted; ++k)
      for (int j = 0; j < cols; ++j) r(k, j) = entry(rng);
    const Eigen::MatrixXd m = l * r;
    std::vector<std::vector<std::int64_t>> mi(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) mi[static_cast<std::size_t>(i)].push_back(static_cast<std::int64_t>(m(i, j)));
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    EXPECT_EQ(exact_rank(mi), static_cast<int>(lu.rank())) << trial;
  }
  EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(exact_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(exact_rank({{0, 1}, {1, 0}}), 2);
}
