#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "thermo/boxcount.hpp"
#include "thermo/contour.hpp"
#include "thermo/grid.hpp"
#include "thermo/rng.hpp"

namespace thermo {

// Koch curve vertices on the base segment (0,0)-(1,0); 4^level segments,
// endpoints included, peaks on the +y side.
inline std::vector<Point2> koch_curve(int level) {
  if (level < 0 || level > 8) fail(errc::level_out_of_range, "level must be in [0,8]");
  std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}};
  const double c = 0.5, s = std::sqrt(3.0) / 2.0;  // rotation by +60 degrees
  for (int l = 0; l < level; ++l) {
    std::vector<Point2> next;
    next.reserve(4 * (pts.size() - 1) + 1);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point2 a = pts[i], b = pts[i + 1];
      const double dx = (b.x - a.x) / 3.0, dy = (b.y - a.y) / 3.0;
      const Point2 p1{a.x + dx, a.y + dy};
      const Point2 p2{a.x + 2 * dx, a.y + 2 * dy};
      const Point2 peak{p1.x + c * dx - s * dy, p1.y + s * dx + c * dy};
      next.push_back(a);
      next.push_back(p1);
      next.push_back(peak);
      next.push_back(p2);
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  return pts;
}

// x <- r x (1-x), burn-in discarded. The r=4 orbit has analytic exponent
// ln 2, reachable through the derivative average <ln|r - 2 r x|>.
inline std::vector<double> logistic_series(double r, int n, double x0, int burn_in = 0) {
  if (!(r > 0.0 && r <= 4.0) || !(x0 > 0.0 && x0 < 1.0) || n < 1 || burn_in < 0)
    fail(errc::invalid_params, "need r in (0,4], x0 in (0,1), n >= 1");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  double x = x0;
  for (int i = 0; i < n + burn_in; ++i) {
    x = r * x * (1.0 - x);
    if (i >= burn_in) out.push_back(x);
  }
  return out;
}

// Henon x-coordinate series; canonical a=1.4, b=0.3.
inline std::vector<double> henon_series(int n, double a = 1.4, double b = 0.3, int burn_in = 200,
                                        double x0 = 0.1, double y0 = 0.1) {
  if (n < 1 || burn_in < 0) fail(errc::invalid_params, "need n >= 1");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  double x = x0, y = y0;
  for (int i = 0; i < n + burn_in; ++i) {
    const double nx = 1.0 - a * x * x + y;
    y = b * x;
    x = nx;
    if (std::fabs(x) > 1e6) fail(errc::divergence, "orbit escaped");
    if (i >= burn_in) out.push_back(x);
  }
  return out;
}

// Uniform noise standardized to zero mean and unit population std.
inline std::vector<double> white_noise(int n, std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_params, "need n >= 2");
  Rng rng(seed);
  std::vector<double> out(static_cast<size_t>(n));
  for (auto& v : out) v = rng.uniform();
  double mean = 0.0;
  for (double v : out) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : out) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (sd == 0.0) fail(errc::zero_variance, "degenerate noise draw");
  for (auto& v : out) v = (v - mean) / sd;
  return out;
}

inline std::vector<double> sine_wave(int n, double period) {
  if (n < 1 || !(period > 0.0)) fail(errc::invalid_params, "need n >= 1, period > 0");
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = std::sin(2.0 * std::numbers::pi * i / period);
  return out;
}

enum class ContourClass { benign, malignant };

struct ContourParams {
  ContourClass class_kind = ContourClass::benign;
  double base_radius = 80.0;  // pixels
  int n_points = 256;         // harmonic budget; malignant spectra reach n_points/4
  double amp = 0.1;           // peak relative radius deviation, must be < 1
  double spectral_decay = 1.0;// power-law exponent for the malignant spectrum
  std::uint64_t seed = 0;
};

struct SynthContour {
  BinaryMask mask;
  Contour contour;     // traced from the mask
  double cx = 0.0, cy = 0.0;  // rasterization center
  double base_radius = 0.0;

  // the generating radius function, for oracle comparisons
  std::vector<int> harmonics;
  std::vector<double> coeffs;  // normalized so max |sum| = 1
  std::vector<double> phases;
  double amp = 0.0;

  double radius_at(double theta) const {
    double s = 0.0;
    for (size_t i = 0; i < harmonics.size(); ++i)
      s += coeffs[i] * std::cos(harmonics[i] * theta + phases[i]);
    return base_radius * (1.0 + amp * s);
  }
};

// Star-shaped lesion outline: radius(theta) = R (1 + amp * sum_k c_k cos(k
// theta + phi_k)). Benign spectra stop at k=4 with steep decay; malignant
// spectra extend to n_points/4 with power-law decay. The harmonic sum is
// normalized to unit peak so amp bounds the relative deviation exactly.
inline SynthContour gen_contour(const ContourParams& p) {
  if (p.n_points < 64) fail(errc::invalid_params, "n_points must be >= 64");
  if (p.base_radius < 8.0) fail(errc::invalid_params, "base_radius must be >= 8");
  if (p.amp < 0.0) fail(errc::invalid_params, "amp must be >= 0");
  if (p.amp >= 1.0) fail(errc::self_intersection, "amp >= 1 drives the radius negative");

  SynthContour out;
  out.base_radius = p.base_radius;
  out.amp = p.amp;

  Rng rng(p.seed);
  const int k_hi = p.class_kind == ContourClass::benign ? 4 : std::max(5, p.n_points / 4);
  for (int k = 2; k <= k_hi; ++k) {
    const double decay = p.class_kind == ContourClass::benign ? 2.5 : p.spectral_decay;
    out.harmonics.push_back(k);
    out.coeffs.push_back(std::pow(static_cast<double>(k), -decay) * rng.gaussian());
    out.phases.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
  }

  // normalize the harmonic sum to unit peak over a dense angular grid
  double peak = 0.0;
  const int grid = 4096;
  for (int i = 0; i < grid; ++i) {
    const double th = 2.0 * std::numbers::pi * i / grid;
    double s = 0.0;
    for (size_t j = 0; j < out.harmonics.size(); ++j)
      s += out.coeffs[j] * std::cos(out.harmonics[j] * th + out.phases[j]);
    peak = std::max(peak, std::fabs(s));
  }
  if (peak > 0.0)
    for (auto& c : out.coeffs) c /= peak;

  for (int i = 0; i < grid; ++i)
    if (out.radius_at(2.0 * std::numbers::pi * i / grid) <= 0.0)
      fail(errc::self_intersection, "negative radius encountered");

  const int half = static_cast<int>(std::ceil(p.base_radius * (1.0 + p.amp))) + 4;
  const int side = 2 * half + 1;
  out.mask = BinaryMask(side, side);
  out.cx = half;
  out.cy = half;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      const double dx = x - out.cx, dy = y - out.cy;
      const double r = std::hypot(dx, dy);
      if (r <= out.radius_at(std::atan2(dy, dx))) out.mask.at(x, y) = 1;
    }
  out.contour = trace_contour(out.mask);
  return out;
}

}  // namespace thermo
