#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "thermo/apen.hpp"
#include "thermo/boxcount.hpp"
#include "thermo/contour.hpp"
#include "thermo/io.hpp"
#include "thermo/lyapunov.hpp"

namespace thermo {

struct NonlinearFeatures {
  double bcd = 0.0;   // box-counting dimension of the boundary, clamped to [0,2]
  double lle = 0.0;   // nats/sample, max over the embedding-dimension set
  double le = 0.0;    // nats/sample at the fixed embedding dimension
  double apen = 0.0;
};

struct FeatureConfig {
  int le_m = 3;                        // embedding dimension for LE
  std::set<int> lle_m_set = {2, 3, 4, 5};
  int tau = 1;
  int apen_m = 2;
  double apen_r_factor = 0.2;
  size_t min_boundary = 32;            // contour points required
  size_t densify_points = 4096;        // boundary resampling for box counting
  int bcd_k_lo = 2;                    // dyadic scale exponents for the boundary
  int bcd_k_hi = 8;
};

// Resamples the closed contour polygon at n equally spaced arc-length
// positions. The boundary is a curve; box counting on the bare pixel
// vertices starves at fine scales for short contours.
inline std::vector<Point2> densify_contour(const Contour& c, size_t n) {
  if (c.points.size() < 3) fail(errc::degenerate_contour, "need >= 3 contour points");
  const size_t np = c.points.size();
  std::vector<double> cum(np + 1, 0.0);
  for (size_t i = 0; i < np; ++i) {
    const auto& a = c.points[i];
    const auto& b = c.points[(i + 1) % np];
    cum[i + 1] = cum[i] + std::hypot(static_cast<double>(b.x - a.x), static_cast<double>(b.y - a.y));
  }
  const double L = cum[np];
  if (L == 0.0) fail(errc::degenerate_contour, "zero-length contour");
  std::vector<Point2> out(n);
  size_t seg = 0;
  for (size_t i = 0; i < n; ++i) {
    const double target = L * static_cast<double>(i) / static_cast<double>(n);
    while (seg + 1 < np && cum[seg + 1] <= target) ++seg;
    const auto& a = c.points[seg];
    const auto& b = c.points[(seg + 1) % np];
    const double len = cum[seg + 1] - cum[seg];
    const double f = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    out[i] = {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
  }
  return out;
}

// The four chaos-theoretic descriptors of a segmented lesion: BCD from the
// 2-D boundary point set, LE/LLE and ApEn from the radial distance signal.
inline NonlinearFeatures extract_features(const BinaryMask& mask,
                                          const FeatureConfig& cfg = {}) {
  const Contour c = trace_contour(mask);
  if (c.points.size() < cfg.min_boundary)
    fail(errc::insufficient_boundary,
         "contour has " + std::to_string(c.points.size()) + " points, need >= " +
             std::to_string(cfg.min_boundary));
  const RadialSignal sig = radial_signal(c);

  NonlinearFeatures f;
  const auto boundary = densify_contour(c, cfg.densify_points);
  const auto scales = dyadic_scales(cfg.bcd_k_lo, cfg.bcd_k_hi);
  f.bcd = std::clamp(box_counting_dim(boundary, scales), 0.0, 2.0);
  f.le = lyapunov_estimate(sig.values, cfg.le_m, cfg.tau);
  f.lle = lle(sig.values, cfg.tau, cfg.lle_m_set);
  f.apen = approx_entropy(sig.values, cfg.apen_m, cfg.apen_r_factor);
  return f;
}

// Feature CSV rows: id,bcd,lle,le,apen
inline std::string encode_features_csv(
    const std::vector<std::pair<std::string, NonlinearFeatures>>& rows) {
  std::string out = "id,bcd,lle,le,apen\n";
  for (const auto& [id, f] : rows) {
    out += id;
    out += ',';
    out += fmt17(f.bcd);
    out += ',';
    out += fmt17(f.lle);
    out += ',';
    out += fmt17(f.le);
    out += ',';
    out += fmt17(f.apen);
    out += '\n';
  }
  return out;
}

}  // namespace thermo
