#pragma once

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>

#include "thermo/error.hpp"

namespace thermo {

// Minimal line plot: one polyline in a fixed-size frame with an axis box.
// Deterministic output (fixed formatting), good enough for eyeballing
// radial signals and divergence curves.
inline std::string svg_line_plot(std::span<const double> ys, const std::string& title,
                                 int width = 640, int height = 320) {
  if (ys.empty()) fail(errc::empty_input, "nothing to plot");
  const double lo = *std::min_element(ys.begin(), ys.end());
  const double hi = *std::max_element(ys.begin(), ys.end());
  const double span = hi > lo ? hi - lo : 1.0;
  const int ml = 50, mr = 15, mt = 30, mb = 25;
  const double pw = width - ml - mr, ph = height - mt - mb;

  char buf[160];
  std::string s;
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\">\n", width,
                height);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%d\" y=\"%d\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                "stroke=\"black\"/>\n",
                ml, mt, pw, ph);
  s += buf;
  std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"20\" font-size=\"13\">%s</text>\n", ml,
                title.c_str());
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"4\" y=\"%d\" font-size=\"11\">%.6g</text>\n<text x=\"4\" y=\"%d\" "
                "font-size=\"11\">%.6g</text>\n",
                mt + 10, hi, mt + static_cast<int>(ph), lo);
  s += buf;
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
  const size_t n = ys.size();
  for (size_t i = 0; i < n; ++i) {
    const double x = ml + (n > 1 ? pw * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0);
    const double y = mt + ph * (1.0 - (ys[i] - lo) / span);
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
    s += buf;
  }
  s += "\"/>\n</svg>\n";
  return s;
}

}  // namespace thermo
