#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <unordered_set>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// epsilon = 2^-k for k in [k_lo, k_hi]
inline std::vector<double> dyadic_scales(int k_lo = 1, int k_hi = 8) {
  if (k_lo < 1 || k_hi < k_lo) fail(errc::invalid_range, "bad scale exponents");
  std::vector<double> eps;
  for (int k = k_lo; k <= k_hi; ++k) eps.push_back(std::ldexp(1.0, -k));
  return eps;
}

// Number of grid boxes of side eps touched by the points, with the grid
// anchored at the bounding-box corner of the unit-normalized set.
inline size_t box_count(std::span<const Point2> pts, double eps, double lo_x, double lo_y,
                        double ext) {
  const long long nside = std::max<long long>(1, static_cast<long long>(std::ceil(1.0 / eps)));
  std::unordered_set<long long> cells;
  cells.reserve(pts.size());
  for (const auto& p : pts) {
    const double qx = (p.x - lo_x) / ext;
    const double qy = (p.y - lo_y) / ext;
    long long ix = static_cast<long long>(qx / eps);
    long long iy = static_cast<long long>(qy / eps);
    ix = std::clamp<long long>(ix, 0, nside - 1);
    iy = std::clamp<long long>(iy, 0, nside - 1);
    cells.insert(ix * nside + iy);
  }
  return cells.size();
}

// Box-counting dimension: least-squares slope of log N(eps) against
// log(1/eps). The point set is uniformly scaled into the unit square first
// (isotropic, so similarity transforms leave the estimate alone).
inline double box_counting_dim(std::span<const Point2> pts,
                               std::span<const double> scales) {
  if (scales.size() < 4) fail(errc::invalid_range, "need >= 4 scales");
  for (double e : scales)
    if (!(e > 0.0 && e < 1.0)) fail(errc::invalid_range, "scales must lie in (0,1)");
  if (pts.size() < 2) fail(errc::degenerate_point_set, "need >= 2 points");
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double ext = std::max(hi_x - lo_x, hi_y - lo_y);
  if (ext == 0.0) fail(errc::degenerate_point_set, "all points identical");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(scales.size());
  for (double eps : scales) {
    const double lx = std::log(1.0 / eps);
    const double ly = std::log(static_cast<double>(box_count(pts, eps, lo_x, lo_y, ext)));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double box_counting_dim(std::span<const Point2> pts) {
  const auto scales = dyadic_scales(1, 8);
  return box_counting_dim(pts, scales);
}

}  // namespace thermo
