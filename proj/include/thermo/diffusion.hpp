#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "thermo/grid.hpp"
#include "thermo/io.hpp"
#include "thermo/rng.hpp"

namespace thermo {

enum class Cond { normal = 0, malignant = 1 };

inline const char* cond_name(Cond c) { return c == Cond::normal ? "normal" : "malignant"; }

// beta/alpha tables of the forward corruption chain. alpha_bar[t-1] is the
// cumulative product up to step t (steps are 1-based).
struct NoiseSchedule {
  int T = 0;
  std::vector<double> betas;
  std::vector<double> alphas;
  std::vector<double> alpha_bars;

  double beta(int t) const { return betas[static_cast<size_t>(t) - 1]; }
  double alpha(int t) const { return alphas[static_cast<size_t>(t) - 1]; }
  double alpha_bar(int t) const { return alpha_bars[static_cast<size_t>(t) - 1]; }
};

inline NoiseSchedule linear_schedule(int T, double beta_start = 1e-4, double beta_end = 0.02) {
  if (T < 1) fail(errc::invalid_range, "T must be >= 1");
  if (!(beta_start > 0.0) || !(beta_end < 1.0) || beta_start > beta_end)
    fail(errc::invalid_range, "need 0 < beta_start <= beta_end < 1");
  NoiseSchedule s;
  s.T = T;
  s.betas.resize(T);
  for (int t = 0; t < T; ++t)
    s.betas[t] = T == 1 ? beta_start
                        : beta_start + (beta_end - beta_start) * t / static_cast<double>(T - 1);
  s.alphas.resize(T);
  s.alpha_bars.resize(T);
  double prod = 1.0;
  for (int t = 0; t < T; ++t) {
    s.alphas[t] = 1.0 - s.betas[t];
    prod *= s.alphas[t];
    s.alpha_bars[t] = prod;
  }
  return s;
}

inline std::string encode_schedule_csv(const NoiseSchedule& s) {
  std::string out = "t,beta,alpha_bar\n";
  for (int t = 1; t <= s.T; ++t) {
    out += std::to_string(t);
    out += ',';
    out += fmt17(s.beta(t));
    out += ',';
    out += fmt17(s.alpha_bar(t));
    out += '\n';
  }
  return out;
}

namespace detail {
inline void check_step(const NoiseSchedule& s, int t) {
  if (t < 1 || t > s.T) fail(errc::step_out_of_range, "step t=" + std::to_string(t));
}
inline void check_shapes(const Tensor2D& a, const Tensor2D& b) {
  if (!a.same_shape(b)) fail(errc::shape_mismatch, "tensor shapes differ");
}
}  // namespace detail

// Forward corruption sampled directly at step t:
// sqrt(abar_t) x0 + sqrt(1-abar_t) eps.
inline Tensor2D q_sample(const Tensor2D& x0, int t, const Tensor2D& eps, const NoiseSchedule& s) {
  detail::check_step(s, t);
  detail::check_shapes(x0, eps);
  const double a = std::sqrt(s.alpha_bar(t));
  const double b = std::sqrt(1.0 - s.alpha_bar(t));
  Tensor2D out(x0.width, x0.height);
  for (size_t i = 0; i < out.size(); ++i) out.data[i] = a * x0.data[i] + b * eps.data[i];
  return out;
}

// Reverse-step mean given a noise prediction:
// (x_t - beta_t/sqrt(1-abar_t) eps_hat) / sqrt(1-beta_t).
inline Tensor2D reverse_mean(const Tensor2D& x_t, int t, const Tensor2D& eps_hat,
                             const NoiseSchedule& s) {
  detail::check_step(s, t);
  detail::check_shapes(x_t, eps_hat);
  const double inv = 1.0 / std::sqrt(1.0 - s.beta(t));
  const double c = s.beta(t) / std::sqrt(1.0 - s.alpha_bar(t));
  Tensor2D out(x_t.width, x_t.height);
  for (size_t i = 0; i < out.size(); ++i) out.data[i] = inv * (x_t.data[i] - c * eps_hat.data[i]);
  return out;
}

// Noise-prediction contract. Implementations must be shape-preserving and
// deterministic in (x_t, t, cond).
class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual Tensor2D predict_noise(const Tensor2D& x_t, int t, Cond cond) const = 0;
};

class ZeroDenoiser final : public Denoiser {
 public:
  Tensor2D predict_noise(const Tensor2D& x_t, int, Cond) const override {
    return Tensor2D(x_t.width, x_t.height, 0.0);
  }
};

struct GaussianTarget {
  double mean = 0.0;
  double stddev = 1.0;
};

// Bayes-optimal noise predictor when x0 ~ N(mu, sigma^2 I): the posterior
// mean E[eps | x_t] of the joint Gaussian induced by the forward chain,
//   E[eps | x_t] = sqrt(1-abar_t) (x_t - sqrt(abar_t) mu) / (abar_t sigma^2 + 1 - abar_t).
// Lets the full sampling chain be checked against closed-form targets.
class GaussianOptimalDenoiser final : public Denoiser {
 public:
  GaussianOptimalDenoiser(NoiseSchedule schedule, GaussianTarget normal, GaussianTarget malignant)
      : schedule_(std::move(schedule)), targets_{normal, malignant} {}

  Tensor2D predict_noise(const Tensor2D& x_t, int t, Cond cond) const override {
    detail::check_step(schedule_, t);
    const GaussianTarget& g = targets_[static_cast<int>(cond)];
    const double ab = schedule_.alpha_bar(t);
    const double denom = ab * g.stddev * g.stddev + 1.0 - ab;
    const double scale = std::sqrt(1.0 - ab) / denom;
    const double shift = std::sqrt(ab) * g.mean;
    Tensor2D out(x_t.width, x_t.height);
    for (size_t i = 0; i < out.size(); ++i) out.data[i] = scale * (x_t.data[i] - shift);
    return out;
  }

 private:
  NoiseSchedule schedule_;
  GaussianTarget targets_[2];
};

inline Tensor2D gaussian_tensor(int w, int h, Rng& rng) {
  Tensor2D out(w, h);
  for (auto& v : out.data) v = rng.gaussian();
  return out;
}

// One ancestral step: reverse mean plus sigma_t z with sigma_t = sqrt(beta_t);
// no noise is injected at the final step t=1. Noise pixels are drawn in
// row-major order so a fixed seed fixes the trajectory.
inline Tensor2D p_sample_step(const Tensor2D& x_t, int t, const Denoiser& d, Cond cond,
                              const NoiseSchedule& s, Rng& rng) {
  Tensor2D mu = reverse_mean(x_t, t, d.predict_noise(x_t, t, cond), s);
  if (t > 1) {
    const double sigma = std::sqrt(s.beta(t));
    for (auto& v : mu.data) v += sigma * rng.gaussian();
  }
  return mu;
}

// Full chain: x_T ~ N(0, I), then reverse steps T..1.
inline Tensor2D sample(const Denoiser& d, int w, int h, Cond cond, const NoiseSchedule& s,
                       Rng& rng) {
  Tensor2D x = gaussian_tensor(w, h, rng);
  for (int t = s.T; t >= 1; --t) x = p_sample_step(x, t, d, cond, s, rng);
  return x;
}

struct BatchItem {
  Tensor2D x0;
  Cond cond = Cond::normal;
};

// Monte-Carlo estimate of the simple noise-prediction loss: per item draw a
// uniform step and fresh Gaussian noise, corrupt, and average the squared
// prediction error over every pixel in the batch.
inline double loss_simple(const Denoiser& d, const std::vector<BatchItem>& batch,
                          const NoiseSchedule& s, Rng& rng) {
  if (batch.empty()) fail(errc::empty_input, "empty batch");
  double sum = 0.0;
  size_t n = 0;
  for (const auto& item : batch) {
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(s.T)));
    const Tensor2D eps = gaussian_tensor(item.x0.width, item.x0.height, rng);
    const Tensor2D x_t = q_sample(item.x0, t, eps, s);
    const Tensor2D eps_hat = d.predict_noise(x_t, t, item.cond);
    detail::check_shapes(eps, eps_hat);
    for (size_t i = 0; i < eps.size(); ++i) {
      const double diff = eps.data[i] - eps_hat.data[i];
      sum += diff * diff;
    }
    n += eps.size();
  }
  return sum / static_cast<double>(n);
}

}  // namespace thermo
