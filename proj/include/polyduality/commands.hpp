#ifndef POLYDUALITY_COMMANDS_HPP
#define POLYDUALITY_COMMANDS_HPP

// Command implementations behind the `polyduality` CLI. Each command writes
// to a stream and returns the process exit code:
//   0 success, 1 verification failure, 2 usage error (thrown as UsageError).

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "polyduality/config.hpp"
#include "polyduality/criticality.hpp"
#include "polyduality/duality.hpp"
#include "polyduality/io.hpp"
#include "polyduality/report.hpp"
#include "polyduality/stratification.hpp"
#include "polyduality/svg.hpp"
#include "polyduality/topology.hpp"

namespace polyduality {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// "W3", "D4", "fold", "zero" (case-insensitive).
inline RegionLabel parse_region_label(int n, std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  RegionLabel label;
  if (text == "fold") {
    if (n % 2 != 0) throw UsageError("the fold ray exists for even n only");
    label = RegionLabel::curve(n - 2);
  } else if (text == "zero" || text == "zero-area") {
    label = RegionLabel::zero_area();
  } else if (text.size() >= 2 && (text[0] == 'w' || text[0] == 'd') &&
             std::all_of(text.begin() + 1, text.end(),
                         [](unsigned char ch) { return std::isdigit(ch); })) {
    const int idx = std::stoi(text.substr(1));
    label = text[0] == 'w' ? RegionLabel::chamber(idx) : RegionLabel::curve(idx);
  } else {
    throw UsageError("unrecognized region label '" + text + "' (use W<odd>, D<even>, fold, zero)");
  }
  try {
    validate_label(n, label);
  } catch (const InvalidSpec& e) {
    throw UsageError(e.what());
  }
  return label;
}

namespace detail {

inline std::string fmt(double v, int precision = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace detail

// stars ---------------------------------------------------------------------

inline int cmd_stars(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  const auto entries = enumerate_critical(cfg.n, 1.0);
  json rows = json::array();
  for (const auto& e : entries) {
    const CriticalReport r = certify_critical(make_star(e.spec), Functional::Area,
                                              Functional::Perimeter, cfg.certify_options());
    rows.push_back({{"kind", e.spec.cls.is_fold() ? "fold" : "star"},
                    {"w", e.spec.cls.is_fold() ? json(nullptr) : json(e.spec.cls.winding)},
                    {"index", r.morse_index},
                    {"predicted_index", e.predicted_index},
                    {"c", discriminant_constant(cfg.n, e.spec.cls)},
                    {"perimeter", e.point.perimeter},
                    {"area", e.point.area}});
  }
  switch (cfg.format) {
    case OutputFormat::Json:
      out << json{{"n", cfg.n}, {"stars", rows}}.dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "kind,w,index,c,perimeter,area\n";
      for (const auto& r : rows) {
        out << r["kind"].get<std::string>() << ','
            << (r["w"].is_null() ? std::string() : std::to_string(r["w"].get<int>())) << ','
            << r["index"].get<int>() << ',' << detail::fmt(r["c"].get<double>(), 17) << ','
            << detail::fmt(r["perimeter"].get<double>(), 17) << ','
            << detail::fmt(r["area"].get<double>(), 17) << '\n';
      }
      break;
    case OutputFormat::Table:
      out << "critical classes of area on perimeter-1 " << cfg.n << "-gons\n";
      out << "kind  w     index  c               perimeter  area\n";
      for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-5s %-5s %-6d %-15.9g %-10.6g %.9g\n",
                      r["kind"].get<std::string>().c_str(),
                      r["w"].is_null() ? "-" : std::to_string(r["w"].get<int>()).c_str(),
                      r["index"].get<int>(), r["c"].get<double>(), r["perimeter"].get<double>(),
                      r["area"].get<double>());
        out << line;
      }
      break;
  }
  return kExitOk;
}

// certify -------------------------------------------------------------------

inline int cmd_certify(const RunConfig& cfg, std::optional<int> winding, bool fold,
                       std::ostream& out) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  if (winding.has_value() == fold) throw UsageError("give exactly one of --w or --fold");
  const CriticalClass cls = fold ? CriticalClass::fold() : CriticalClass::star(*winding);
  try {
    StarSpec{cfg.n, cls, 1.0}.validate();
  } catch (const InvalidSpec& e) {
    throw UsageError(e.what());
  }
  const CertifyOptions opt = cfg.certify_options();

  const double r_pi = 1.0 / unit_star_perimeter(cfg.n, cls);
  const CriticalReport on_pi =
      certify_critical(make_star({cfg.n, cls, r_pi}), Functional::Area, Functional::Perimeter, opt);
  const int predicted = predicted_index(cfg.n, cls);
  bool ok = on_pi.certified() && on_pi.morse_index == predicted;

  std::optional<CriticalReport> on_a;
  bool identity = true;
  if (!cls.is_fold()) {
    const double r_a = std::sqrt(1.0 / std::abs(unit_star_area(cfg.n, cls)));
    on_a = certify_critical(make_star({cfg.n, cls, r_a}), Functional::Perimeter, Functional::Area,
                            opt);
    identity = cls.winding > 0 ? on_a->morse_index + on_pi.morse_index == 2 * cfg.n - 4
                               : on_a->morse_index == on_pi.morse_index;
    ok = ok && on_a->certified() && identity;
  }

  if (cfg.format == OutputFormat::Json) {
    json j{{"n", cfg.n},
           {"class", cls.label()},
           {"area_on_fixed_perimeter", to_json(on_pi)},
           {"predicted_index", predicted},
           {"certified", ok}};
    if (on_a) {
      j["perimeter_on_fixed_area"] = to_json(*on_a);
      j["duality"] = {{"relation", cls.winding > 0 ? "m + M = 2n-4" : "m = M"},
                      {"holds", identity}};
    }
    out << j.dump(2) << '\n';
  } else {
    auto block = [&](const char* title, const CriticalReport& r) {
      out << title << '\n'
          << "  residual    " << detail::fmt(r.residual) << " (threshold "
          << detail::fmt(r.residual_threshold) << ")\n"
          << "  multiplier  " << detail::fmt(r.multiplier) << '\n'
          << "  index       " << r.morse_index << '\n'
          << "  nullity     " << r.nullity << '\n'
          << "  coindex     " << r.coindex << '\n'
          << "  dim         " << r.working_dimension << '\n';
    };
    out << "n=" << cfg.n << " class " << cls.label() << '\n';
    block("area on fixed perimeter (M):", on_pi);
    out << "  predicted   " << predicted << '\n';
    if (on_a) {
      block("perimeter on fixed area (m):", *on_a);
      if (cls.winding > 0) {
        out << "duality: m + M = " << on_a->morse_index + on_pi.morse_index
            << ", 2n-4 = " << 2 * cfg.n - 4 << (identity ? "  OK" : "  FAIL") << '\n';
      } else {
        out << "duality: m = " << on_a->morse_index << ", M = " << on_pi.morse_index
            << (identity ? "  OK" : "  FAIL") << '\n';
      }
    } else {
      out << "perimeter on fixed area: not applicable (the fold has zero area)\n";
    }
    out << (ok ? "CERTIFIED" : "NOT CERTIFIED") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

// homology ------------------------------------------------------------------

struct HomologyQuery {
  std::optional<std::string> region;
  std::optional<double> pi;
  std::optional<double> area;
};

inline RegionLabel resolve_region(const RunConfig& cfg, const HomologyQuery& q) {
  if (q.region && (q.pi || q.area)) throw UsageError("give either --region or --pi/--area");
  if (q.region) return parse_region_label(cfg.n, *q.region);
  if (!q.pi || !q.area) throw UsageError("give --region, or both --pi and --area");
  if (!(*q.pi > 0.0)) throw UsageError("--pi must be positive");
  if (*q.area == 0.0) return RegionLabel::zero_area();
  return classify(cfg.n, {*q.pi, *q.area}, cfg.curve_tol);
}

inline std::string range_note_text(int n, const RegionLabel& label) {
  if (!has_range_deviation(n, label)) return "";
  const HomologyTable published = published_range_table(n, label);
  const HomologyTable oracle = homology_closed_form(n, label);
  std::ostringstream os;
  os << "note (" << kRangeNoteKind << "): ";
  if (label.kind == RegionLabel::Kind::ZeroArea) {
    os << "the published zero-area range uses strict j > n-2; for odd n the oracle includes "
          "j = n-2";
  } else {
    os << "the published odd range for singular fibers starts at 2n-5-i; the oracle starts at "
          "2n-3-i";
  }
  os << ". published support {";
  const auto ps = published.support();
  for (std::size_t k = 0; k < ps.size(); ++k) os << (k ? "," : "") << ps[k];
  os << "}, oracle support {";
  const auto os_ = oracle.support();
  for (std::size_t k = 0; k < os_.size(); ++k) os << (k ? "," : "") << os_[k];
  os << "}; oracle values are used.";
  return os.str();
}

inline int cmd_homology(const RunConfig& cfg, const HomologyQuery& q, std::ostream& out) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  const RegionLabel label = resolve_region(cfg, q);
  if (label.kind == RegionLabel::Kind::Outside) {
    out << "point lies outside the image of (perimeter, area) for n=" << cfg.n << '\n';
    return kExitVerificationFailure;
  }
  const HomologyTable closed = homology_closed_form(cfg.n, label);
  const AbDescriptors ab = ab_descriptors(cfg.n, label);
  const MayerVietorisSolution mv = mv_solve_detailed(ab.a, ab.b, ab.united);
  const bool agree = closed == mv.intersection;
  const std::string note = range_note_text(cfg.n, label);

  switch (cfg.format) {
    case OutputFormat::Json: {
      json j{{"n", cfg.n},
             {"region", label.to_string()},
             {"closed_form", to_json(closed)},
             {"mayer_vietoris", to_json(mv.intersection)},
             {"agree", agree},
             {"notes", json::array()}};
      if (!note.empty()) j["notes"].push_back(note);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "j,closed_form,mayer_vietoris\n";
      for (const auto& [j, r] : closed.ranks) out << j << ',' << r << ',' << mv.intersection.rank(j) << '\n';
      break;
    case OutputFormat::Table:
      out << "n=" << cfg.n << " region " << label.to_string() << "  (fiber dimension "
          << 2 * cfg.n - 5 << ")\n\n";
      out << "closed form:\n" << to_text(closed, "H_j") << '\n';
      out << "Mayer-Vietoris:\n" << to_text(mv) << '\n';
      out << (agree ? "AGREE" : "DISAGREE") << '\n';
      if (!note.empty()) out << note << '\n';
      break;
  }
  return agree ? kExitOk : kExitVerificationFailure;
}

// cerf ----------------------------------------------------------------------

inline int cmd_cerf(const RunConfig& cfg, const std::optional<std::string>& svg_path,
                    std::ostream& out) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  const CerfDiagram d = cerf_diagram(cfg.n, cfg.pi_min, cfg.pi_max);
  if (svg_path) {
    SvgStyle style;
    style.samples = cfg.svg_samples;
    std::ofstream f(*svg_path, std::ios::binary);
    if (!f) throw Error("cannot write " + *svg_path);
    f << render_cerf_svg(d, style);
    if (!f) throw Error("write failed: " + *svg_path);
  }
  if (cfg.format == OutputFormat::Json) {
    out << to_json(d).dump(2) << '\n';
  } else {
    out << "n=" << cfg.n << ": " << d.curves.size() << " curves, " << d.chambers.size()
        << " chambers" << (d.has_fold_ray() ? ", fold ray D" + std::to_string(cfg.n - 2) : "")
        << '\n';
    for (const auto& c : d.curves) {
      out << "  D" << c.morse_index << "  c = " << detail::fmt(c.c, 12) << "  (" << c.source.label()
          << ")\n";
    }
    if (svg_path) out << "wrote " << *svg_path << '\n';
  }
  return kExitOk;
}

// report --------------------------------------------------------------------

inline int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
  ReportOptions opt;
  opt.certify = cfg.certify_options();
  opt.curve_tol = cfg.curve_tol;
  opt.seed = cfg.seed;
  const VerificationReport rep = run_report(cfg.n, opt);
  if (cfg.format == OutputFormat::Table) {
    for (const auto& c : rep.checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    for (const auto& note : rep.notes) {
      out << "NOTE " << note["kind"].get<std::string>() << ": " << note["fiber"].get<std::string>()
          << " (published " << note["published_range"].get<std::string>() << "; oracle "
          << note["oracle_range"].get<std::string>() << ")\n";
    }
  } else {
    out << to_json(rep).dump(2) << '\n';
  }
  return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

}  // namespace polyduality

#endif  // POLYDUALITY_COMMANDS_HPP
