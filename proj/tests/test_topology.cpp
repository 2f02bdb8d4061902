#include <gtest/gtest.h>

#include "polyduality/topology.hpp"

using namespace polyduality;

namespace {

CellComplexDescriptor cells(std::vector<int> dims) { return {std::move(dims)}; }

std::vector<int> support(const HomologyTable& t) { return t.support(); }

}  // namespace

TEST(AbDescriptors, Examples) {
  const auto w3 = ab_descriptors(7, RegionLabel::chamber(3));
  EXPECT_EQ(w3.a, cells({0, 2}));
  EXPECT_EQ(w3.b, cells({0, 2, 4, 6}));
  EXPECT_EQ(w3.united, cells({0, 2, 4, 6, 8, 10}));

  const auto d4 = ab_descriptors(6, RegionLabel::curve(4));
  EXPECT_EQ(d4.a, cells({0, 2, 4}));
  EXPECT_EQ(d4.b, cells({0, 2, 4}));

  const auto w1 = ab_descriptors(3, RegionLabel::chamber(1));
  EXPECT_EQ(w1.a, cells({0}));
  EXPECT_EQ(w1.b, cells({0}));
  EXPECT_EQ(w1.united, cells({0, 2}));

  const auto zero7 = ab_descriptors(7, RegionLabel::zero_area());
  EXPECT_EQ(zero7.a, cells({0, 2, 4}));
  EXPECT_EQ(zero7.b, cells({0, 2, 4}));

  EXPECT_THROW(ab_descriptors(7, RegionLabel::outside()), OutsideRegion);
  EXPECT_THROW(ab_descriptors(7, RegionLabel::chamber(4)), InvalidSpec);
  EXPECT_THROW(ab_descriptors(7, RegionLabel::curve(12)), InvalidSpec);
}

TEST(MvSolve, PrintedTables) {
  const auto w3 = ab_descriptors(7, RegionLabel::chamber(3));
  const HomologyTable t = mv_solve(w3.a, w3.b, w3.united);
  EXPECT_EQ(support(t), (std::vector<int>{0, 2, 7, 9}));
  EXPECT_EQ(t.top_degree, 9);

  const auto d4 = ab_descriptors(6, RegionLabel::curve(4));
  EXPECT_EQ(support(mv_solve(d4.a, d4.b, d4.united)), (std::vector<int>{0, 2, 4, 5, 7}));

  // equator of the 2-sphere
  EXPECT_EQ(support(mv_solve(cells({0}), cells({0}), cells({0, 2}))), (std::vector<int>{0, 1}));
}

TEST(MvSolve, DetailedRowsCarryTheSequenceData) {
  const auto w3 = ab_descriptors(7, RegionLabel::chamber(3));
  const auto sol = mv_solve_detailed(w3.a, w3.b, w3.united);
  ASSERT_EQ(sol.rows.size(), 11u);
  EXPECT_EQ(sol.rows[6].a, 0);
  EXPECT_EQ(sol.rows[6].b, 1);
  EXPECT_EQ(sol.rows[6].united, 1);
  EXPECT_EQ(sol.rows[5].united, 0);
}

TEST(MvSolve, MalformedDescriptors) {
  EXPECT_THROW(mv_solve(cells({1}), cells({0}), cells({0, 2})), MalformedDescriptors);
  EXPECT_THROW(mv_solve(cells({0, 4}), cells({0}), cells({0, 2})), MalformedDescriptors);
  EXPECT_THROW(mv_solve(cells({2, 0}), cells({0}), cells({0, 2})), MalformedDescriptors);
  EXPECT_THROW(mv_solve(cells({}), cells({}), cells({})), MalformedDescriptors);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(support(homology_closed_form(7, RegionLabel::chamber(3))), (std::vector<int>{0, 2, 7, 9}));
  EXPECT_EQ(support(homology_closed_form(6, RegionLabel::zero_area())),
            (std::vector<int>{0, 2, 4, 5, 7}));
  EXPECT_EQ(support(homology_closed_form(3, RegionLabel::zero_area())), (std::vector<int>{0, 1}));
  EXPECT_EQ(support(homology_closed_form(5, RegionLabel::curve(2))), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(support(homology_closed_form(9, RegionLabel::curve(0))), (std::vector<int>{0}));
  EXPECT_EQ(support(homology_closed_form(9, RegionLabel::curve(14))), (std::vector<int>{0}));
  EXPECT_THROW(homology_closed_form(5, RegionLabel::outside()), OutsideRegion);
}

TEST(ClosedForm, AgreesWithMayerVietorisEverywhere) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& label : all_region_labels(n)) {
      const auto ab = ab_descriptors(n, label);
      EXPECT_EQ(mv_solve(ab.a, ab.b, ab.united), homology_closed_form(n, label))
          << "n=" << n << " " << label.to_string();
    }
  }
}

TEST(ClosedForm, ReflectionSymmetry) {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 0; i <= 2 * n - 4; ++i) {
      const RegionLabel l = i % 2 == 0 ? RegionLabel::curve(i) : RegionLabel::chamber(i);
      const RegionLabel m{l.kind, 2 * n - 4 - i};
      EXPECT_EQ(homology_closed_form(n, l), homology_closed_form(n, m)) << n << " " << i;
    }
  }
}

TEST(ClosedForm, ZeroAreaMatchesItsStratum) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(homology_closed_form(n, RegionLabel::zero_area()),
              homology_closed_form(n, resolve_zero_area(n)));
  }
}

TEST(Invariants, EulerAndPoincare) {
  for (int n = 3; n <= 12; ++n) {
    const int dim = 2 * n - 5;
    for (int i = 1; i <= dim; i += 2) {
      const HomologyTable t = homology_closed_form(n, RegionLabel::chamber(i));
      EXPECT_EQ(euler_characteristic(t), 0);
      EXPECT_TRUE(poincare_check(t, dim));
    }
    for (int i = 0; i <= 2 * n - 4; i += 2) {
      const HomologyTable t = homology_closed_form(n, RegionLabel::curve(i));
      EXPECT_EQ(euler_characteristic(t), 1);
      EXPECT_FALSE(poincare_check(t, dim));
    }
    const HomologyTable z = homology_closed_form(n, RegionLabel::zero_area());
    EXPECT_EQ(euler_characteristic(z), n % 2 == 0 ? 1 : 0);
    EXPECT_EQ(poincare_check(z, dim), n % 2 != 0);
  }
  EXPECT_TRUE(poincare_check(homology_closed_form(7, RegionLabel::chamber(3)), 9));
  EXPECT_FALSE(poincare_check(homology_closed_form(6, RegionLabel::curve(4)), 7));
}

TEST(Invariants, UnionIsProjectiveSpace) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& label : all_region_labels(n)) {
      const auto ab = ab_descriptors(n, label);
      EXPECT_EQ(ab.united, even_cells_up_to(2 * n - 4));
      EXPECT_EQ(static_cast<int>(ab.united.cell_dims.size()), n - 1);
    }
  }
}

TEST(FixedArea, Betti) {
  EXPECT_EQ(support(c_a_betti(7, 1)), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(support(c_a_betti(6, -1)), (std::vector<int>{0, 2}));
  EXPECT_EQ(support(c_a_betti(3, 1)), (std::vector<int>{0}));
  EXPECT_EQ(c_a_betti(8, 1), c_a_betti(8, -1));
  EXPECT_THROW(c_a_betti(5, 0), InvalidSpec);

  EXPECT_EQ(support(c_zero_area_betti(6)), (std::vector<int>{0, 2, 4, 5, 7}));
  EXPECT_EQ(support(c_zero_area_betti(3)), (std::vector<int>{0, 1}));
}
