#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermo/error.hpp"

namespace thermo {

struct GbdtConfig {
  int n_rounds = 200;
  double eta = 0.1;        // shrinkage on leaf weights
  int max_depth = 4;
  double reg_lambda = 1.0; // L2 leaf regularizer
  double gamma = 0.0;      // split penalty
  double base_score = 0.0; // prior logit
};

struct TreeNode {
  int feature = -1;        // -1 marks a leaf
  double threshold = 0.0;  // x[feature] < threshold goes left
  int left = -1;
  int right = -1;
  double weight = 0.0;     // leaf value, eta already applied
};

struct Tree {
  std::vector<TreeNode> nodes;

  double value(std::span<const double> x) const {
    int i = 0;
    while (nodes[static_cast<size_t>(i)].feature >= 0) {
      const TreeNode& n = nodes[static_cast<size_t>(i)];
      i = x[static_cast<size_t>(n.feature)] < n.threshold ? n.left : n.right;
    }
    return nodes[static_cast<size_t>(i)].weight;
  }
};

struct GbdtModel {
  GbdtConfig config;
  size_t feature_len = 0;
  std::vector<Tree> trees;

  double margin(std::span<const double> x) const {
    if (x.size() != feature_len) fail(errc::length_mismatch, "feature length mismatch");
    double f = config.base_score;
    for (const auto& t : trees) f += t.value(x);
    return f;
  }
};

inline double sigmoid(double z) {
  return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

inline double predict_proba(const GbdtModel& m, std::span<const double> x) {
  return sigmoid(m.margin(x));
}

// log(1 + e^f) - y f, evaluated without overflow
inline double logistic_loss(double margin, int y) {
  const double a = std::max(margin, 0.0);
  return a - y * margin + std::log1p(std::exp(-std::fabs(margin)));
}

struct Sample {
  std::string id;
  std::vector<double> x;
  int label = 0;          // 0 benign/normal, 1 malignant
  bool synthetic = false; // generated sample; kept out of held-out folds by default
};

struct Dataset {
  std::vector<Sample> samples;
  size_t feature_len = 0;
};

namespace detail {

struct ScanState {
  double g_left = 0.0;
  double h_left = 0.0;
  size_t n_left = 0;
  double prev_value = 0.0;
  bool has_prev = false;
};

struct BestSplit {
  double gain = 0.0;
  int feature = -1;
  double threshold = 0.0;
};

inline double leaf_weight(double g, double h, double reg_lambda) {
  return -g / (h + reg_lambda);
}

inline double split_gain(double gl, double hl, double g, double h, double reg_lambda,
                         double gamma) {
  const double gr = g - gl, hr = h - hl;
  return 0.5 * (gl * gl / (hl + reg_lambda) + gr * gr / (hr + reg_lambda) -
                g * g / (h + reg_lambda)) -
         gamma;
}

}  // namespace detail

// Second-order boosting on logistic loss: per round, fit a regression tree to
// gradients g = p - y and hessians h = p(1-p) with exact greedy split search
// over midpoint thresholds; leaf weights are Newton steps -G/(H+lambda)
// scaled by eta. Split search scans presorted feature columns, so the result
// does not depend on sample order when feature values are distinct.
// Ties in gain resolve to the lower feature index, then lower threshold.
// round_loss, when given, receives the mean training loss after each round.
inline GbdtModel train(const Dataset& ds, const GbdtConfig& cfg, std::uint64_t /*seed*/ = 0,
                       std::vector<double>* round_loss = nullptr) {
  const size_t n = ds.samples.size();
  size_t pos = 0;
  for (const auto& s : ds.samples) {
    if (s.x.size() != ds.feature_len) fail(errc::length_mismatch, "sample " + s.id);
    for (double v : s.x)
      if (!std::isfinite(v)) fail(errc::non_finite_feature, "sample " + s.id);
    pos += static_cast<size_t>(s.label == 1);
  }
  if (pos < 2 || n - pos < 2) fail(errc::degenerate_dataset, "need >= 2 samples per class");
  if (cfg.n_rounds < 0 || cfg.max_depth < 1 || cfg.eta <= 0.0 || cfg.reg_lambda < 0.0)
    fail(errc::invalid_params, "bad gbdt config");

  const size_t nf = ds.feature_len;
  // presorted sample order per feature (value, then index)
  std::vector<std::vector<std::uint32_t>> order(nf);
  for (size_t f = 0; f < nf; ++f) {
    auto& ord = order[f];
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0u);
    std::sort(ord.begin(), ord.end(), [&](std::uint32_t a, std::uint32_t b) {
      const double va = ds.samples[a].x[f], vb = ds.samples[b].x[f];
      if (va != vb) return va < vb;
      return a < b;
    });
  }

  GbdtModel model;
  model.config = cfg;
  model.feature_len = nf;

  std::vector<double> margin(n, cfg.base_score);
  std::vector<double> grad(n), hess(n);
  std::vector<int> node_of(n);

  for (int round = 0; round < cfg.n_rounds; ++round) {
    for (size_t i = 0; i < n; ++i) {
      const double p = sigmoid(margin[i]);
      grad[i] = p - ds.samples[i].label;
      hess[i] = p * (1.0 - p);
    }

    Tree tree;
    tree.nodes.push_back(TreeNode{});
    std::fill(node_of.begin(), node_of.end(), 0);
    std::vector<int> active{0};

    for (int depth = 0; depth < cfg.max_depth && !active.empty(); ++depth) {
      // per active node: slot index, totals, best candidate
      std::vector<int> slot(tree.nodes.size(), -1);
      for (size_t s = 0; s < active.size(); ++s) slot[static_cast<size_t>(active[s])] = static_cast<int>(s);
      std::vector<double> tot_g(active.size(), 0.0), tot_h(active.size(), 0.0);
      std::vector<size_t> tot_n(active.size(), 0);
      for (size_t i = 0; i < n; ++i) {
        const int nd = node_of[i];
        if (nd < 0 || slot[static_cast<size_t>(nd)] < 0) continue;
        const int s = slot[static_cast<size_t>(nd)];
        tot_g[static_cast<size_t>(s)] += grad[i];
        tot_h[static_cast<size_t>(s)] += hess[i];
        tot_n[static_cast<size_t>(s)]++;
      }

      std::vector<detail::BestSplit> best(active.size());
      std::vector<detail::ScanState> st(active.size());
      for (size_t f = 0; f < nf; ++f) {
        std::fill(st.begin(), st.end(), detail::ScanState{});
        for (const std::uint32_t idx : order[f]) {
          const int nd = node_of[idx];
          if (nd < 0 || slot[static_cast<size_t>(nd)] < 0) continue;
          const int s = slot[static_cast<size_t>(nd)];
          auto& state = st[static_cast<size_t>(s)];
          const double v = ds.samples[idx].x[f];
          if (state.has_prev && v > state.prev_value && state.n_left > 0) {
            const double gain =
                detail::split_gain(state.g_left, state.h_left, tot_g[static_cast<size_t>(s)],
                                   tot_h[static_cast<size_t>(s)], cfg.reg_lambda, cfg.gamma);
            if (gain > best[static_cast<size_t>(s)].gain) {
              best[static_cast<size_t>(s)] = {gain, static_cast<int>(f),
                                              0.5 * (state.prev_value + v)};
            }
          }
          state.g_left += grad[idx];
          state.h_left += hess[idx];
          state.n_left++;
          state.prev_value = v;
          state.has_prev = true;
        }
      }

      std::vector<int> next_active;
      for (size_t s = 0; s < active.size(); ++s) {
        const int nd = active[s];
        if (best[s].feature >= 0 && best[s].gain > 0.0) {
          TreeNode& parent = tree.nodes[static_cast<size_t>(nd)];
          parent.feature = best[s].feature;
          parent.threshold = best[s].threshold;
          parent.left = static_cast<int>(tree.nodes.size());
          parent.right = parent.left + 1;
          tree.nodes.push_back(TreeNode{});
          tree.nodes.push_back(TreeNode{});
          next_active.push_back(parent.left);
          next_active.push_back(parent.right);
        } else {
          tree.nodes[static_cast<size_t>(nd)].weight =
              cfg.eta * detail::leaf_weight(tot_g[s], tot_h[s], cfg.reg_lambda);
        }
      }

      for (size_t i = 0; i < n; ++i) {
        const int nd = node_of[i];
        if (nd < 0 || slot[static_cast<size_t>(nd)] < 0) continue;
        const TreeNode& pn = tree.nodes[static_cast<size_t>(nd)];
        if (pn.feature >= 0)
          node_of[i] = ds.samples[i].x[static_cast<size_t>(pn.feature)] < pn.threshold ? pn.left
                                                                                       : pn.right;
      }
      active = std::move(next_active);
    }

    // depth cap reached: finalize whatever is still open
    if (!active.empty()) {
      std::vector<double> g_left(active.size(), 0.0), h_left(active.size(), 0.0);
      std::vector<int> slot(tree.nodes.size(), -1);
      for (size_t s = 0; s < active.size(); ++s) slot[static_cast<size_t>(active[s])] = static_cast<int>(s);
      for (size_t i = 0; i < n; ++i) {
        const int nd = node_of[i];
        if (nd >= 0 && slot[static_cast<size_t>(nd)] >= 0) {
          g_left[static_cast<size_t>(slot[static_cast<size_t>(nd)])] += grad[i];
          h_left[static_cast<size_t>(slot[static_cast<size_t>(nd)])] += hess[i];
        }
      }
      for (size_t s = 0; s < active.size(); ++s)
        tree.nodes[static_cast<size_t>(active[s])].weight =
            cfg.eta * detail::leaf_weight(g_left[s], h_left[s], cfg.reg_lambda);
    }

    for (size_t i = 0; i < n; ++i) margin[i] += tree.value(ds.samples[i].x);
    model.trees.push_back(std::move(tree));

    if (round_loss) {
      double loss = 0.0;
      for (size_t i = 0; i < n; ++i) loss += logistic_loss(margin[i], ds.samples[i].label);
      round_loss->push_back(loss / static_cast<double>(n));
    }
  }
  return model;
}

// ---- versioned JSON serialization ----

inline nlohmann::ordered_json model_to_json(const GbdtModel& m) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["model"] = "gbdt-logistic";
  j["config"] = {{"n_rounds", m.config.n_rounds}, {"eta", m.config.eta},
                 {"max_depth", m.config.max_depth}, {"lambda", m.config.reg_lambda},
                 {"gamma", m.config.gamma}, {"base_score", m.config.base_score}};
  j["feature_len"] = m.feature_len;
  nlohmann::ordered_json trees = nlohmann::ordered_json::array();
  for (const auto& t : m.trees) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : t.nodes) {
      if (n.feature >= 0)
        nodes.push_back({{"f", n.feature}, {"t", n.threshold}, {"l", n.left}, {"r", n.right}});
      else
        nodes.push_back({{"w", n.weight}});
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  j["trees"] = std::move(trees);
  return j;
}

inline GbdtModel model_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != 1) fail(errc::bad_format, "unknown schema_version");
    if (j.at("model").get<std::string>() != "gbdt-logistic")
      fail(errc::bad_format, "unknown model kind");
    GbdtModel m;
    const auto& c = j.at("config");
    m.config.n_rounds = c.at("n_rounds").get<int>();
    m.config.eta = c.at("eta").get<double>();
    m.config.max_depth = c.at("max_depth").get<int>();
    m.config.reg_lambda = c.at("lambda").get<double>();
    m.config.gamma = c.at("gamma").get<double>();
    m.config.base_score = c.at("base_score").get<double>();
    m.feature_len = j.at("feature_len").get<size_t>();
    for (const auto& tj : j.at("trees")) {
      Tree t;
      for (const auto& nj : tj.at("nodes")) {
        TreeNode n;
        if (nj.contains("f")) {
          n.feature = nj.at("f").get<int>();
          n.threshold = nj.at("t").get<double>();
          n.left = nj.at("l").get<int>();
          n.right = nj.at("r").get<int>();
        } else {
          n.weight = nj.at("w").get<double>();
        }
        t.nodes.push_back(n);
      }
      if (t.nodes.empty()) fail(errc::bad_format, "tree with no nodes");
      for (const auto& n : t.nodes)
        if (n.feature >= 0 &&
            (n.feature >= static_cast<int>(m.feature_len) || n.left < 0 || n.right < 0 ||
             n.left >= static_cast<int>(t.nodes.size()) || n.right >= static_cast<int>(t.nodes.size())))
          fail(errc::bad_format, "node references out of range");
      m.trees.push_back(std::move(t));
    }
    return m;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::bad_format, std::string("model json: ") + e.what());
  }
}

}  // namespace thermo
