#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "thermo/gbdt.hpp"
#include "thermo/rng.hpp"

namespace thermo {

// Percent metrics of one evaluation; sensitivity/specificity are NaN with
// the flag cleared when their denominator is empty.
struct FoldMetrics {
  size_t tp = 0, tn = 0, fp = 0, fn = 0;
  double accuracy = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  bool sensitivity_defined = false;
  bool specificity_defined = false;
};

inline FoldMetrics confusion_metrics(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size()) fail(errc::length_mismatch, "label sequences differ");
  if (y_true.empty()) fail(errc::empty_input, "no labels");
  FoldMetrics m;
  for (size_t i = 0; i < y_true.size(); ++i) {
    const bool t = y_true[i] == 1, p = y_pred[i] == 1;
    if (t && p) ++m.tp;
    else if (!t && !p) ++m.tn;
    else if (!t && p) ++m.fp;
    else ++m.fn;
  }
  const double n = static_cast<double>(y_true.size());
  m.accuracy = 100.0 * static_cast<double>(m.tp + m.tn) / n;
  if (m.tp + m.fn > 0) {
    m.sensitivity = 100.0 * static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
    m.sensitivity_defined = true;
  } else {
    m.sensitivity = std::numeric_limits<double>::quiet_NaN();
  }
  if (m.tn + m.fp > 0) {
    m.specificity = 100.0 * static_cast<double>(m.tn) / static_cast<double>(m.tn + m.fp);
    m.specificity_defined = true;
  } else {
    m.specificity = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

struct MetricSummary {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double stddev = std::numeric_limits<double>::quiet_NaN();  // population std over folds
  bool defined = false;
};

struct CvOptions {
  bool include_synthetic_in_eval = false;
  double threshold = 0.5;  // predicted positive when p > threshold
};

struct CvSummary {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<FoldMetrics> folds;
  MetricSummary accuracy, sensitivity, specificity;
};

namespace detail {

inline MetricSummary summarize(const std::vector<FoldMetrics>& folds, double FoldMetrics::*field,
                               bool FoldMetrics::*flag) {
  MetricSummary s;
  double sum = 0.0;
  size_t n = 0;
  for (const auto& f : folds)
    if (flag == nullptr || f.*flag) {
      sum += f.*field;
      ++n;
    }
  if (n == 0) return s;
  s.mean = sum / static_cast<double>(n);
  double var = 0.0;
  for (const auto& f : folds)
    if (flag == nullptr || f.*flag) var += (f.*field - s.mean) * (f.*field - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(n));
  s.defined = true;
  return s;
}

}  // namespace detail

// Stratified k-fold evaluation. Real samples are split class-proportionally
// by a seeded shuffle; synthetic-tagged samples augment every training fold
// and stay out of held-out folds unless opted in.
inline CvSummary stratified_kfold(const Dataset& ds, int k, const GbdtConfig& cfg,
                                  std::uint64_t seed, const CvOptions& opts = {}) {
  if (k < 2) fail(errc::invalid_params, "need k >= 2");
  std::vector<size_t> eligible[2];
  std::vector<size_t> train_only;
  for (size_t i = 0; i < ds.samples.size(); ++i) {
    const auto& s = ds.samples[i];
    if (s.label != 0 && s.label != 1) fail(errc::invalid_params, "labels must be 0/1");
    if (s.synthetic && !opts.include_synthetic_in_eval)
      train_only.push_back(i);
    else
      eligible[s.label].push_back(i);
  }
  for (int c = 0; c < 2; ++c)
    if (eligible[c].size() < static_cast<size_t>(k))
      fail(errc::too_few_samples_per_class,
           "class " + std::to_string(c) + " has " + std::to_string(eligible[c].size()) +
               " eval-eligible samples, need >= " + std::to_string(k));

  Rng rng(seed);
  std::vector<int> fold_of(ds.samples.size(), -1);
  for (int c = 0; c < 2; ++c) {
    rng.shuffle(eligible[c]);
    for (size_t i = 0; i < eligible[c].size(); ++i)
      fold_of[eligible[c][i]] = static_cast<int>(i % static_cast<size_t>(k));
  }

  CvSummary out;
  out.k = k;
  out.seed = seed;
  for (int f = 0; f < k; ++f) {
    Dataset train_ds;
    train_ds.feature_len = ds.feature_len;
    std::vector<size_t> eval_idx;
    for (size_t i = 0; i < ds.samples.size(); ++i) {
      if (fold_of[i] == f)
        eval_idx.push_back(i);
      else
        train_ds.samples.push_back(ds.samples[i]);
    }
    const GbdtModel model = train(train_ds, cfg, seed);
    std::vector<int> y_true, y_pred;
    y_true.reserve(eval_idx.size());
    for (const size_t i : eval_idx) {
      y_true.push_back(ds.samples[i].label);
      y_pred.push_back(predict_proba(model, ds.samples[i].x) > opts.threshold ? 1 : 0);
    }
    out.folds.push_back(confusion_metrics(y_true, y_pred));
  }
  out.accuracy = detail::summarize(out.folds, &FoldMetrics::accuracy, nullptr);
  out.sensitivity =
      detail::summarize(out.folds, &FoldMetrics::sensitivity, &FoldMetrics::sensitivity_defined);
  out.specificity =
      detail::summarize(out.folds, &FoldMetrics::specificity, &FoldMetrics::specificity_defined);
  return out;
}

}  // namespace thermo
