#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyduality/sampling.hpp"
#include "polyduality/stratification.hpp"

using namespace polyduality;

TEST(Discriminant, ClosedFormExamples) {
  EXPECT_NEAR(discriminant_constant(4, CriticalClass::star(1)), 1.0 / 16, 1e-15);
  EXPECT_NEAR(discriminant_constant(4, CriticalClass::star(-1)), -1.0 / 16, 1e-15);
  EXPECT_EQ(discriminant_constant(6, CriticalClass::fold()), 0.0);
  // classical isoperimetric constant in the limit
  const double c = discriminant_constant(10000, CriticalClass::star(1));
  EXPECT_NEAR(c * 4 * std::numbers::pi, 1.0, 1e-6);
}

TEST(Discriminant, MatchesGeneratedStars) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& d : discriminant_constants(n)) {
      const Polygon p = make_star({n, d.source, 1.3});
      const double ratio = area(p) / (perimeter(p) * perimeter(p));
      if (d.source.is_fold()) {
        EXPECT_EQ(ratio, 0.0);
      } else {
        EXPECT_NEAR(ratio / d.c, 1.0, 1e-12) << n << " " << d.source.label();
      }
    }
  }
}

TEST(Discriminant, OrderMatchesIndexOrder) {
  for (int n = 3; n <= 12; ++n) {
    const auto curves = discriminant_constants(n);
    ASSERT_EQ(curves.size(), static_cast<std::size_t>(n - 1));
    for (std::size_t k = 0; k < curves.size(); ++k) {
      EXPECT_EQ(curves[k].morse_index, 2 * static_cast<int>(k));
      if (k > 0) {
        EXPECT_LT(curves[k - 1].c, curves[k].c);
      }
    }
  }
}

TEST(Discriminant, ReflectionSymmetry) {
  for (int n = 3; n <= 12; ++n) {
    for (int w = 1; w <= (n - 1) / 2; ++w) {
      EXPECT_EQ(discriminant_constant(n, CriticalClass::star(-w)),
                -discriminant_constant(n, CriticalClass::star(w)));
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(4, {4, 1}), RegionLabel::curve(4));
  EXPECT_EQ(classify(4, {4, 1.5}), RegionLabel::outside());
  EXPECT_EQ(classify(7, {1, 0}), RegionLabel::chamber(5));
  EXPECT_EQ(classify(6, {1, 0}), RegionLabel::curve(4));
  EXPECT_EQ(classify(4, {4, -1.5}), RegionLabel::outside());
  EXPECT_THROW(classify(4, {0, 1}), InvalidSpec);
}

TEST(Classify, StarsLandOnTheirCurves) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& cls : critical_classes(n)) {
      const Polygon p = make_star({n, cls, 0.9});
      EXPECT_EQ(classify(n, phi(p)), RegionLabel::curve(predicted_index(n, cls)))
          << n << " " << cls.label();
    }
  }
}

TEST(Classify, ChamberBetweenCurves) {
  for (int n = 3; n <= 12; ++n) {
    const auto curves = discriminant_constants(n);
    for (std::size_t k = 0; k + 1 < curves.size(); ++k) {
      const double c = 0.5 * (curves[k].c + curves[k + 1].c);
      EXPECT_EQ(classify(n, {1.0, c}), RegionLabel::chamber(curves[k].morse_index + 1));
    }
  }
}

TEST(Classify, ScaleInvariant) {
  auto rng = make_rng(41);
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + k % 8;
    const CerfPoint pt = phi(random_polygon(n, rng));
    for (double lambda : {0.3, 5.0}) {
      EXPECT_EQ(classify(n, pt), classify(n, {lambda * pt.perimeter, lambda * lambda * pt.area}));
    }
  }
}

TEST(Classify, RandomPolygonsAreInsideTheImage) {
  for (int n = 3; n <= 12; ++n) {
    auto rng = make_rng(kDefaultSeed, static_cast<std::uint64_t>(n));
    for (int k = 0; k < 1000; ++k) {
      EXPECT_NE(classify(n, phi(random_polygon(n, rng))).kind, RegionLabel::Kind::Outside);
    }
  }
}

TEST(CerfDiagram, Model) {
  const CerfDiagram d6 = cerf_diagram(6);
  EXPECT_TRUE(d6.has_fold_ray());
  EXPECT_EQ(d6.curves.size(), 5u);
  EXPECT_TRUE(std::any_of(d6.curves.begin(), d6.curves.end(), [](const auto& c) { return c.c == 0.0; }));

  const CerfDiagram d7 = cerf_diagram(7);
  EXPECT_FALSE(d7.has_fold_ray());
  EXPECT_EQ(d7.curves.size(), 6u);
  EXPECT_EQ(d7.chambers.size(), 5u);
  for (const auto& c : d7.curves) EXPECT_NE(c.c, 0.0);

  const auto sorted = discriminant_constants(7);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    EXPECT_EQ(d7.curves[k].c, sorted[k].c);
  }
  for (std::size_t k = 0; k < d7.chambers.size(); ++k) {
    EXPECT_EQ(d7.chambers[k].label, 2 * static_cast<int>(k) + 1);
    EXPECT_LT(d7.chambers[k].c_low, d7.chambers[k].c_high);
  }
  EXPECT_THROW(cerf_diagram(5, 2.0, 1.0), InvalidSpec);
}
