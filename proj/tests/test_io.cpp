#include <gtest/gtest.h>

#include <sstream>

#include "polyduality/io.hpp"
#include "polyduality/report.hpp"
#include "polyduality/sampling.hpp"

using namespace polyduality;

TEST(PolygonIo, JsonRoundTripIsExact) {
  auto rng = make_rng(5);
  for (int k = 0; k < 200; ++k) {
    const Polygon p = random_polygon(3 + k % 10, rng);
    const json j = to_json(p);
    EXPECT_EQ(j["n"].get<std::size_t>(), p.size());
    EXPECT_EQ(polygon_from_json(json::parse(j.dump())), p);
  }
}

TEST(PolygonIo, CsvRoundTripIsExact) {
  auto rng = make_rng(6);
  for (int k = 0; k < 200; ++k) {
    const Polygon p = random_polygon(3 + k % 10, rng);
    std::istringstream in(to_csv(p));
    EXPECT_EQ(polygon_from_csv(in), p);
  }
}

TEST(PolygonIo, RejectsMalformedInput) {
  EXPECT_THROW(polygon_from_json(json::parse(R"({"n": 3})")), InvalidPolygon);
  EXPECT_THROW(polygon_from_json(json::parse(R"({"vertices": [[0,0],[1],[0,1]]})")), InvalidPolygon);
  EXPECT_THROW(polygon_from_json(json::parse(R"({"n": 4, "vertices": [[0,0],[1,0],[0,1]]})")),
               InvalidPolygon);
  EXPECT_THROW(polygon_from_json(json::parse(R"({"vertices": [[0,0],[1,0]]})")), InvalidPolygon);
  std::istringstream bad("0,0\n1;0\n0,1\n");
  EXPECT_THROW(polygon_from_csv(bad), InvalidPolygon);
  std::istringstream words("0,0\nx,y\n0,1\n");
  EXPECT_THROW(polygon_from_csv(words), InvalidPolygon);
}

TEST(ReportIo, CriticalReportKeys) {
  const CriticalReport r = certify_critical(make_star({5, CriticalClass::star(1), 1.0}),
                                            Functional::Area, Functional::Perimeter);
  const json j = to_json(r);
  for (const char* key : {"residual", "multiplier", "index", "nullity", "coindex", "dim", "eigenvalues"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["index"], 6);
  EXPECT_EQ(j["eigenvalues"].size(), 6u);
}

TEST(ReportIo, HomologyRoundTripAndCsv) {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& label : all_region_labels(n)) {
      const HomologyTable t = homology_closed_form(n, label);
      EXPECT_EQ(homology_from_json(json::parse(to_json(t).dump())), t);
    }
  }
  const HomologyTable w3 = homology_closed_form(7, RegionLabel::chamber(3));
  const std::string csv = to_csv(w3);
  EXPECT_EQ(csv.rfind("j,rank\n", 0), 0u);
  EXPECT_NE(csv.find("7,1\n"), std::string::npos);
  EXPECT_NE(csv.find("8,0\n"), std::string::npos);
}

TEST(ReportIo, MayerVietorisTextListsTopDegreeFirst) {
  const auto ab = ab_descriptors(7, RegionLabel::chamber(3));
  const std::string text = to_text(mv_solve_detailed(ab.a, ab.b, ab.united));
  EXPECT_LT(text.find("\n| 9 "), text.find("\n| 0 "));
  EXPECT_NE(text.find("\n| 0 "), std::string::npos);
  EXPECT_NE(text.find("H(A n B)"), std::string::npos);
}

TEST(ReportIo, CerfDiagramJson) {
  const json j = to_json(cerf_diagram(6));
  ASSERT_EQ(j["curves"].size(), 5u);
  EXPECT_EQ(j["curves"][2]["index"], 4);
  EXPECT_EQ(j["curves"][2]["c"].get<double>(), 0.0);
  EXPECT_EQ(j["chambers"].size(), 4u);
}

TEST(RangeNotes, BothPresentForEveryN) {
  for (int n = 3; n <= 12; ++n) {
    const json notes = range_deviation_notes(n);
    ASSERT_EQ(notes.size(), 2u);
    for (const auto& note : notes) {
      EXPECT_EQ(note["kind"], kRangeNoteKind);
      EXPECT_EQ(note["used"], "oracle");
    }
    EXPECT_EQ(notes[1]["applies_to_this_n"].get<bool>(), n % 2 != 0);
    EXPECT_EQ(notes[0]["applies_to_this_n"].get<bool>(), n >= 5);
  }
}

TEST(RangeNotes, PublishedRangeDiffersExactlyWhereFlagged) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& label : all_region_labels(n)) {
      EXPECT_EQ(published_range_table(n, label) != homology_closed_form(n, label),
                has_range_deviation(n, label))
          << n << " " << label.to_string();
    }
  }
  // n = 5 curve D2: published starts odd degrees at 3, oracle at 5
  EXPECT_EQ(published_range_table(5, RegionLabel::curve(2)).support(), (std::vector<int>{0, 2, 3, 5}));
  EXPECT_EQ(homology_closed_form(5, RegionLabel::curve(2)).support(), (std::vector<int>{0, 2, 5}));
}

TEST(Report, FullBundleForSmallN) {
  ReportOptions opt;
  opt.random_polygons = 200;
  opt.level_samples = 100;
  for (int n : {5, 6}) {
    const VerificationReport rep = run_report(n, opt);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << n << " " << c.name;
    EXPECT_TRUE(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                               [](const auto& a, const auto& b) { return a.name < b.name; }));
    const bool has_fold = std::any_of(rep.checks.begin(), rep.checks.end(),
                                      [](const auto& c) { return c.name == "fold_hessian_rank"; });
    EXPECT_EQ(has_fold, n % 2 == 0);
    const json j = to_json(rep);
    EXPECT_EQ(j["notes"].size(), 2u);
    EXPECT_TRUE(j["all_pass"].get<bool>());
  }
}
