#pragma once

#include <span>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

// Phase-space reconstruction by lagged copies. Vector i is
// (x[i], x[i+tau], ..., x[i+(m-1)tau]), stored row-major.
struct DelayEmbedding {
  int m = 0;
  int tau = 0;
  size_t count = 0;
  std::vector<double> flat;  // count * m

  std::span<const double> vec(size_t i) const { return {flat.data() + i * m, static_cast<size_t>(m)}; }
};

inline DelayEmbedding delay_embed(std::span<const double> signal, int m, int tau) {
  if (m < 1 || tau < 1) fail(errc::invalid_params, "need m >= 1 and tau >= 1");
  const long long n = static_cast<long long>(signal.size());
  const long long count = n - static_cast<long long>(m - 1) * tau;
  if (count < 1) fail(errc::signal_too_short, "N must exceed (m-1)*tau");
  DelayEmbedding e;
  e.m = m;
  e.tau = tau;
  e.count = static_cast<size_t>(count);
  e.flat.resize(e.count * m);
  for (size_t i = 0; i < e.count; ++i)
    for (int j = 0; j < m; ++j) e.flat[i * m + j] = signal[i + static_cast<size_t>(j) * tau];
  return e;
}

}  // namespace thermo
