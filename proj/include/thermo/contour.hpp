#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "thermo/grid.hpp"

namespace thermo {

struct PixelPoint {
  int x = 0;
  int y = 0;
  bool operator==(const PixelPoint&) const = default;
};

// Ordered closed boundary; consecutive points (and last->first) are
// 8-neighbors.
struct Contour {
  std::vector<PixelPoint> points;
};

struct RadialSignal {
  std::vector<double> values;    // distance of each contour point to the centroid
  double cx = 0.0, cy = 0.0;     // sub-pixel centroid
};

namespace detail {

// Component labelling, 8-connected. Returns label grid and per-label pixel
// counts; label 0 = background.
inline std::vector<int> label_components(const BinaryMask& mask, std::vector<size_t>& counts) {
  std::vector<int> labels(mask.size(), 0);
  counts.assign(1, 0);
  std::vector<size_t> stack;
  int next = 1;
  for (size_t s = 0; s < mask.size(); ++s) {
    if (!mask.data[s] || labels[s]) continue;
    stack.push_back(s);
    labels[s] = next;
    size_t n = 0;
    while (!stack.empty()) {
      const size_t cur = stack.back();
      stack.pop_back();
      ++n;
      const int cx = static_cast<int>(cur % mask.width);
      const int cy = static_cast<int>(cur / mask.width);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (!dx && !dy) continue;
          const int nx = cx + dx, ny = cy + dy;
          if (!mask.in_bounds(nx, ny)) continue;
          const size_t ni = static_cast<size_t>(ny) * mask.width + nx;
          if (mask.data[ni] && !labels[ni]) {
            labels[ni] = next;
            stack.push_back(ni);
          }
        }
    }
    counts.push_back(n);
    ++next;
  }
  return labels;
}

}  // namespace detail

// Moore-neighbor boundary trace of the largest 8-connected foreground
// component. Counter-clockwise in image coordinates (y down), starting at
// the top-most then left-most boundary pixel; Jacob's stopping criterion.
// Component size ties break toward the smaller (y,x) start pixel, which is
// the first one met by the row-major scan.
inline Contour trace_contour(const BinaryMask& mask) {
  std::vector<size_t> counts;
  const std::vector<int> labels = detail::label_components(mask, counts);
  if (counts.size() <= 1) fail(errc::empty_mask, "mask has no foreground");
  int best = 1;
  for (int l = 2; l < static_cast<int>(counts.size()); ++l)
    if (counts[l] > counts[best]) best = l;

  // top-most then left-most pixel of the chosen component
  PixelPoint start{-1, -1};
  for (int y = 0; y < mask.height && start.x < 0; ++y)
    for (int x = 0; x < mask.width; ++x)
      if (labels[static_cast<size_t>(y) * mask.width + x] == best) {
        start = {x, y};
        break;
      }

  const auto fg = [&](int x, int y) {
    return mask.in_bounds(x, y) && labels[static_cast<size_t>(y) * mask.width + x] == best;
  };

  // Moore neighborhood in counter-clockwise visual order (y down):
  // W, SW, S, SE, E, NE, N, NW
  static constexpr int DX[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
  static constexpr int DY[8] = {0, 1, 1, 1, 0, -1, -1, -1};

  Contour out;
  out.points.push_back(start);

  PixelPoint cur = start;
  int back = 0;       // W neighbor of start is background by construction
  int first_dir = -1; // direction of the first move away from start
  const size_t cap = 4 * mask.size() + 16;

  while (true) {
    int found = -1;
    for (int i = 1; i <= 8; ++i) {
      const int d = (back + i) % 8;
      if (fg(cur.x + DX[d], cur.y + DY[d])) {
        found = d;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    // Jacob's criterion: about to leave start along the initial direction again
    if (cur == start && found == first_dir) break;
    if (cur == start && first_dir < 0) first_dir = found;

    // last background cell scanned, re-expressed as a neighbor of the new pixel
    const PixelPoint prev_bg{cur.x + DX[(found + 7) % 8], cur.y + DY[(found + 7) % 8]};
    cur = {cur.x + DX[found], cur.y + DY[found]};
    for (int d = 0; d < 8; ++d)
      if (cur.x + DX[d] == prev_bg.x && cur.y + DY[d] == prev_bg.y) {
        back = d;
        break;
      }
    out.points.push_back(cur);
    if (out.points.size() > cap) fail(errc::invalid_params, "contour trace did not close");
  }
  // closure re-appends the start pixel just before the stop test fires
  if (out.points.size() > 1 && out.points.back() == start) out.points.pop_back();
  return out;
}

// Arithmetic mean of the contour point sequence.
inline std::pair<double, double> centroid(const Contour& c) {
  if (c.points.empty()) fail(errc::degenerate_contour, "contour has no points");
  double sx = 0.0, sy = 0.0;
  for (const auto& p : c.points) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(c.points.size());
  return {sx / n, sy / n};
}

// Boundary-to-center distance waveform, in contour order.
inline RadialSignal radial_signal(const Contour& c) {
  if (c.points.size() < 3) fail(errc::degenerate_contour, "need >= 3 contour points");
  const auto [cx, cy] = centroid(c);
  RadialSignal sig;
  sig.cx = cx;
  sig.cy = cy;
  sig.values.reserve(c.points.size());
  for (const auto& p : c.points) sig.values.push_back(std::hypot(p.x - cx, p.y - cy));
  return sig;
}

}  // namespace thermo
