#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <span>
#include <vector>

#include "thermo/embed.hpp"

namespace thermo {

// Fit range for the divergence curve, in samples.
struct FitWindow {
  int lo = 1;
  int hi = 20;
};

inline FitWindow default_fit_window(size_t n) {
  const int hi = std::max(2, std::min<int>(20, static_cast<int>(n / 10)));
  return {1, hi};
}

// Mean period from zero crossings of the mean-removed signal; falls back to
// 10 samples when the signal does not cross its mean.
inline int mean_period(std::span<const double> signal) {
  double mean = 0.0;
  for (double v : signal) mean += v;
  mean /= static_cast<double>(signal.size());
  size_t crossings = 0;
  for (size_t i = 1; i < signal.size(); ++i) {
    const bool a = signal[i - 1] >= mean, b = signal[i] >= mean;
    if (a != b) ++crossings;
  }
  if (crossings < 2) return 10;
  const double period = 2.0 * static_cast<double>(signal.size()) / static_cast<double>(crossings);
  return std::max(1, static_cast<int>(std::llround(period)));
}

struct DivergencePoint {
  int t = 0;
  double mean_log = 0.0;  // <ln d(t)/d(0)> over surviving neighbor pairs
  size_t pairs = 0;
};

// Rosenstein-style divergence curve: for every embedded point, take the
// nearest neighbor whose index is separated by more than the mean period,
// then track the mean log separation growth. Pairs with d(0)=0 are skipped.
inline std::vector<DivergencePoint> divergence_curve(std::span<const double> signal, int m,
                                                     int tau, int t_max) {
  const DelayEmbedding emb = delay_embed(signal, m, tau);
  const size_t M = emb.count;
  if (M < 2) fail(errc::signal_too_short, "need >= 2 embedded vectors");
  const int W = mean_period(signal);

  std::vector<long long> nn(M, -1);
  std::vector<double> d0(M, 0.0);
  bool any = false;
  for (size_t i = 0; i < M; ++i) {
    double best = std::numeric_limits<double>::infinity();
    long long best_j = -1;
    const double* vi = emb.flat.data() + i * emb.m;
    for (size_t j = 0; j < M; ++j) {
      const long long sep = static_cast<long long>(i) - static_cast<long long>(j);
      if (sep <= W && sep >= -W) continue;
      const double* vj = emb.flat.data() + j * emb.m;
      double s = 0.0;
      for (int k = 0; k < emb.m; ++k) {
        const double d = vi[k] - vj[k];
        s += d * d;
      }
      if (s > 0.0 && s < best) {
        best = s;
        best_j = static_cast<long long>(j);
      }
    }
    if (best_j >= 0) {
      nn[i] = best_j;
      d0[i] = std::sqrt(best);
      any = true;
    }
  }
  if (!any) fail(errc::no_valid_neighbors, "temporal window excluded all neighbor pairs");

  std::vector<DivergencePoint> curve;
  for (int t = 1; t <= t_max; ++t) {
    double sum = 0.0;
    size_t cnt = 0;
    for (size_t i = 0; i < M; ++i) {
      if (nn[i] < 0) continue;
      const size_t j = static_cast<size_t>(nn[i]);
      if (i + t >= M || j + t >= M) continue;
      const double* a = emb.flat.data() + (i + t) * emb.m;
      const double* b = emb.flat.data() + (j + t) * emb.m;
      double s = 0.0;
      for (int k = 0; k < emb.m; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
      }
      if (s <= 0.0) continue;
      sum += 0.5 * std::log(s) - std::log(d0[i]);
      ++cnt;
    }
    if (cnt > 0) curve.push_back({t, sum / static_cast<double>(cnt), cnt});
  }
  return curve;
}

// Least-squares slope of the divergence curve over the fit window,
// nats per sample.
inline double lyapunov_estimate(std::span<const double> signal, int m, int tau,
                                FitWindow window) {
  if (window.lo < 1 || window.hi < window.lo)
    fail(errc::invalid_range, "fit window must satisfy 1 <= lo <= hi");
  const auto curve = divergence_curve(signal, m, tau, window.hi);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  size_t n = 0;
  for (const auto& p : curve) {
    if (p.t < window.lo || p.t > window.hi) continue;
    sx += p.t;
    sy += p.mean_log;
    sxx += static_cast<double>(p.t) * p.t;
    sxy += p.t * p.mean_log;
    ++n;
  }
  if (n < 2) fail(errc::no_valid_neighbors, "fewer than 2 divergence points in fit window");
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) fail(errc::invalid_range, "degenerate fit window");
  return (n * sxy - sx * sy) / denom;
}

inline double lyapunov_estimate(std::span<const double> signal, int m, int tau) {
  return lyapunov_estimate(signal, m, tau, default_fit_window(signal.size()));
}

// Largest exponent as the max of Rosenstein estimates across embedding
// dimensions; the spectrum itself is not reconstructed from a scalar series.
inline double lle(std::span<const double> signal, int tau, const std::set<int>& m_set,
                  FitWindow window) {
  if (m_set.empty()) fail(errc::invalid_params, "m_set must be nonempty");
  double best = -std::numeric_limits<double>::infinity();
  for (int m : m_set) best = std::max(best, lyapunov_estimate(signal, m, tau, window));
  return best;
}

inline double lle(std::span<const double> signal, int tau,
                  const std::set<int>& m_set = {2, 3, 4, 5}) {
  return lle(signal, tau, m_set, default_fit_window(signal.size()));
}

}  // namespace thermo
