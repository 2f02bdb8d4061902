#ifndef POLYDUALITY_SVG_HPP
#define POLYDUALITY_SVG_HPP

// Static SVG rendering of a Cerf diagram. Output is a pure function of the
// diagram and the style, so repeated runs are byte-identical.

#include <algorithm>
#include <cstdio>
#include <string>

#include "polyduality/stratification.hpp"

namespace polyduality {

struct SvgStyle {
  int width = 800;
  int height = 600;
  int margin = 60;
  int samples = 256;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string render_cerf_svg(const CerfDiagram& d, const SvgStyle& style = {}) {
  const double x0 = style.margin;
  const double x1 = style.width - style.margin;
  const double y0 = style.margin;
  const double y1 = style.height - style.margin;

  const double c_lo = std::min(d.curves.front().c, 0.0);
  const double c_hi = std::max(d.curves.back().c, 0.0);
  double a_lo = c_lo * d.pi_max * d.pi_max;
  double a_hi = c_hi * d.pi_max * d.pi_max;
  const double pad = 0.05 * (a_hi - a_lo);
  a_lo -= pad;
  a_hi += pad;

  auto sx = [&](double pi) { return x0 + (x1 - x0) * pi / d.pi_max; };
  auto sy = [&](double a) { return y1 - (y1 - y0) * (a - a_lo) / (a_hi - a_lo); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) +
         "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + std::to_string(style.height) + "\">\n";
  out += "<title>Cerf diagram, n=" + std::to_string(d.n) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(style.width) + "\" height=\"" +
         std::to_string(style.height) + "\" fill=\"white\"/>\n";

  // axes: perimeter horizontal, area vertical
  out += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + detail::num(x0) + "\" y1=\"" + detail::num(sy(0.0)) + "\" x2=\"" +
         detail::num(x1) + "\" y2=\"" + detail::num(sy(0.0)) + "\"/>\n";
  out += "<line x1=\"" + detail::num(x0) + "\" y1=\"" + detail::num(y0) + "\" x2=\"" +
         detail::num(x0) + "\" y2=\"" + detail::num(y1) + "\"/>\n";
  out += "</g>\n";
  out += "<text x=\"" + detail::num(x1) + "\" y=\"" + detail::num(sy(0.0) + 16) +
         "\" font-size=\"12\" text-anchor=\"end\">perimeter</text>\n";
  out += "<text x=\"" + detail::num(x0 + 4) + "\" y=\"" + detail::num(y0 - 8) +
         "\" font-size=\"12\">area</text>\n";

  out += "<g class=\"curves\" fill=\"none\" stroke-width=\"2\">\n";
  for (const auto& c : d.curves) {
    const bool ray = c.source.is_fold();
    out += "<polyline class=\"" + std::string(ray ? "curve fold-ray" : "curve") +
           "\" data-index=\"" + std::to_string(c.morse_index) + "\" data-c=\"" + detail::sci(c.c) +
           "\" stroke=\"" + (ray ? "#c0392b" : "#1f3a93") + "\" points=\"";
    for (int k = 0; k < style.samples; ++k) {
      const double t = static_cast<double>(k) / (style.samples - 1);
      const double pi = d.pi_min + t * (d.pi_max - d.pi_min);
      if (k > 0) out += ' ';
      out += detail::num(sx(pi)) + "," + detail::num(sy(c.c * pi * pi));
    }
    out += "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"labels\" font-size=\"12\" font-family=\"sans-serif\">\n";
  for (const auto& c : d.curves) {
    out += "<text class=\"curve-label\" x=\"" + detail::num(x1 + 4) + "\" y=\"" +
           detail::num(sy(c.c * d.pi_max * d.pi_max) + 4) + "\">D" +
           std::to_string(c.morse_index) + "</text>\n";
  }
  const double pi_label = d.pi_min + 0.85 * (d.pi_max - d.pi_min);
  for (const auto& w : d.chambers) {
    const double c_mid = 0.5 * (w.c_low + w.c_high);
    out += "<text class=\"chamber-label\" x=\"" + detail::num(sx(pi_label)) + "\" y=\"" +
           detail::num(sy(c_mid * pi_label * pi_label) + 4) + "\" fill=\"#555555\">W" +
           std::to_string(w.label) + "</text>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace polyduality

#endif  // POLYDUALITY_SVG_HPP
