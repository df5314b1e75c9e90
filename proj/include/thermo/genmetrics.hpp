#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

struct GaussianStats {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;  // symmetric, PSD up to -1e-8 eigenvalue tolerance
};

inline Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(errc::too_few_samples, "empty matrix");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) fail(errc::bad_format, "ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

// Sample mean and unbiased (n-1) covariance of feature rows.
inline GaussianStats fit_gaussian(const Eigen::MatrixXd& features) {
  const Eigen::Index n = features.rows();
  if (n < 2) fail(errc::too_few_samples, "need >= 2 rows");
  GaussianStats g;
  g.mean = features.colwise().mean();
  const Eigen::MatrixXd centered = features.rowwise() - g.mean.transpose();
  g.cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  g.cov = ((g.cov + g.cov.transpose()) * 0.5).eval();
  return g;
}

namespace detail {

constexpr double kPsdTol = 1e-8;

inline void check_symmetric(const Eigen::MatrixXd& c) {
  if ((c - c.transpose()).cwiseAbs().maxCoeff() >= 1e-9)
    fail(errc::not_psd, "covariance not symmetric");
}

// Eigenvalues clamped at zero; anything below -kPsdTol is a hard failure.
inline Eigen::VectorXd clamped_eigenvalues(const Eigen::VectorXd& ev) {
  Eigen::VectorXd out = ev;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < -kPsdTol) fail(errc::not_psd, "matrix has eigenvalue " + std::to_string(out[i]));
    if (out[i] < 0.0) out[i] = 0.0;
  }
  return out;
}

inline Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
  const Eigen::VectorXd ev = clamped_eigenvalues(es.eigenvalues());
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace detail

// Frechet distance between Gaussian fits:
//   |mu_a - mu_b|^2 + Tr(Ca + Cb - 2 (Ca Cb)^(1/2)).
// The cross term is computed as Tr sqrt(Ca^(1/2) Cb Ca^(1/2)), which is the
// same trace on a symmetric PSD argument.
inline double frechet_distance(const GaussianStats& a, const GaussianStats& b) {
  if (a.mean.size() != b.mean.size() || a.cov.rows() != b.cov.rows())
    fail(errc::dimension_mismatch, "stat dimensions differ");
  detail::check_symmetric(a.cov);
  detail::check_symmetric(b.cov);
  const Eigen::MatrixXd ra = detail::psd_sqrt(a.cov);
  Eigen::MatrixXd inner = ra * b.cov * ra;
  inner = ((inner + inner.transpose()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inner);
  const Eigen::VectorXd ev = detail::clamped_eigenvalues(es.eigenvalues());
  const double tr_sqrt = ev.cwiseSqrt().sum();
  const double mean_term = (a.mean - b.mean).squaredNorm();
  return mean_term + a.cov.trace() + b.cov.trace() - 2.0 * tr_sqrt;
}

// Identical Frechet computation on alternate (intermediate-layer) embeddings.
inline double sliced_fid(const Eigen::MatrixXd& features_a, const Eigen::MatrixXd& features_b) {
  return frechet_distance(fit_gaussian(features_a), fit_gaussian(features_b));
}

// Rows of class probabilities, one per generated image.
struct ProbMatrix {
  Eigen::MatrixXd p;  // n x C, each row sums to 1
};

inline void validate_prob_matrix(const ProbMatrix& pm) {
  for (Eigen::Index i = 0; i < pm.p.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < pm.p.cols(); ++j) {
      if (pm.p(i, j) < 0.0) fail(errc::invalid_rows, "negative probability in row " + std::to_string(i));
      s += pm.p(i, j);
    }
    if (std::fabs(s - 1.0) > 1e-9)
      fail(errc::invalid_rows, "row " + std::to_string(i) + " sums to " + std::to_string(s));
  }
}

// Inception score: exp of the mean KL between per-row distributions and the
// split marginal; 0 log 0 reads as 0. Returns mean and population std over
// contiguous splits.
inline std::pair<double, double> inception_score(const ProbMatrix& pm, int splits = 1) {
  const Eigen::Index n = pm.p.rows();
  if (splits < 1 || n < splits) fail(errc::invalid_params, "need n >= splits >= 1");
  validate_prob_matrix(pm);
  std::vector<double> scores;
  for (int s = 0; s < splits; ++s) {
    const Eigen::Index lo = n * s / splits;
    const Eigen::Index hi = n * (s + 1) / splits;
    const Eigen::Index cnt = hi - lo;
    Eigen::VectorXd marginal = Eigen::VectorXd::Zero(pm.p.cols());
    for (Eigen::Index i = lo; i < hi; ++i) marginal += pm.p.row(i).transpose();
    marginal /= static_cast<double>(cnt);
    double mean_kl = 0.0;
    for (Eigen::Index i = lo; i < hi; ++i) {
      double kl = 0.0;
      for (Eigen::Index j = 0; j < pm.p.cols(); ++j) {
        const double pij = pm.p(i, j);
        if (pij > 0.0) kl += pij * (std::log(pij) - std::log(marginal[j]));
      }
      mean_kl += kl;
    }
    scores.push_back(std::exp(mean_kl / static_cast<double>(cnt)));
  }
  double mean = 0.0;
  for (double v : scores) mean += v;
  mean /= static_cast<double>(scores.size());
  double var = 0.0;
  for (double v : scores) var += (v - mean) * (v - mean);
  var /= static_cast<double>(scores.size());
  return {mean, std::sqrt(var)};
}

}  // namespace thermo
