#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

inline double population_stddev(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(x.size()));
}

// Approximate entropy, classical Pincus formulation with self-matches.
// Tolerance r = r_factor * population std-dev; a zero-variance signal is 0
// by the limit convention.
inline double approx_entropy(std::span<const double> x, int m = 2, double r_factor = 0.2) {
  const size_t N = x.size();
  if (m < 1) fail(errc::invalid_params, "m must be >= 1");
  if (N < static_cast<size_t>(m) + 2) fail(errc::signal_too_short, "need N >= m + 2");
  const double sd = population_stddev(x);
  if (sd == 0.0) return 0.0;
  const double r = r_factor * sd;

  const size_t M1 = N - m + 1;  // templates of length m
  const size_t M2 = N - m;      // templates of length m+1
  std::vector<size_t> cm(M1, 1), cm1(M2, 1);  // self-matches included

  for (size_t i = 0; i < M1; ++i) {
    for (size_t j = i + 1; j < M1; ++j) {
      double dmax = 0.0;
      for (int k = 0; k < m; ++k) {
        const double d = std::fabs(x[i + k] - x[j + k]);
        if (d > dmax) dmax = d;
        if (dmax > r) break;
      }
      if (dmax <= r) {
        ++cm[i];
        ++cm[j];
        if (i < M2 && j < M2 && std::fabs(x[i + m] - x[j + m]) <= r) {
          ++cm1[i];
          ++cm1[j];
        }
      }
    }
  }

  double phi_m = 0.0;
  for (size_t i = 0; i < M1; ++i) phi_m += std::log(static_cast<double>(cm[i]) / static_cast<double>(M1));
  phi_m /= static_cast<double>(M1);

  double phi_m1 = 0.0;
  for (size_t i = 0; i < M2; ++i) phi_m1 += std::log(static_cast<double>(cm1[i]) / static_cast<double>(M2));
  phi_m1 /= static_cast<double>(M2);

  return phi_m - phi_m1;
}

}  // namespace thermo
