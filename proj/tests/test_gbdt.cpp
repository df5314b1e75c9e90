#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "thermo/fusion.hpp"
#include "thermo/gbdt.hpp"
#include "thermo/rng.hpp"

using namespace thermo;

namespace {

Dataset toy_1d(const std::vector<double>& xs, const std::vector<int>& ys) {
  Dataset ds;
  ds.feature_len = 1;
  for (size_t i = 0; i < xs.size(); ++i)
    ds.samples.push_back({"s" + std::to_string(i), {xs[i]}, ys[i], false});
  return ds;
}

// Exhaustive depth-1 oracle: try every feature and every midpoint threshold,
// score with the same gain formula from first principles.
struct StumpChoice {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
  double wl = 0.0, wr = 0.0;
};

StumpChoice stump_oracle(const Dataset& ds, const GbdtConfig& cfg) {
  const double p0 = sigmoid(cfg.base_score);
  std::vector<double> g(ds.samples.size()), h(ds.samples.size());
  double G = 0.0, H = 0.0;
  for (size_t i = 0; i < ds.samples.size(); ++i) {
    g[i] = p0 - ds.samples[i].label;
    h[i] = p0 * (1.0 - p0);
    G += g[i];
    H += h[i];
  }
  StumpChoice best;
  for (size_t f = 0; f < ds.feature_len; ++f) {
    std::vector<double> vals;
    for (const auto& s : ds.samples) vals.push_back(s.x[f]);
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
      if (sorted[i] == sorted[i + 1]) continue;
      const double thr = 0.5 * (sorted[i] + sorted[i + 1]);
      double GL = 0.0, HL = 0.0;
      for (size_t j = 0; j < vals.size(); ++j)
        if (vals[j] < thr) {
          GL += g[j];
          HL += h[j];
        }
      const double GR = G - GL, HR = H - HL;
      const double gain = 0.5 * (GL * GL / (HL + cfg.reg_lambda) + GR * GR / (HR + cfg.reg_lambda) -
                                 G * G / (H + cfg.reg_lambda)) -
                          cfg.gamma;
      if (gain > best.gain) {
        best = {static_cast<int>(f), thr, gain, -GL / (HL + cfg.reg_lambda) * cfg.eta,
                -GR / (HR + cfg.reg_lambda) * cfg.eta};
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("zero rounds predicts the prior") {
  Dataset ds = toy_1d({0.0, 1.0, 2.0, 3.0}, {0, 0, 1, 1});
  GbdtConfig cfg;
  cfg.n_rounds = 0;
  cfg.base_score = 0.7;
  const GbdtModel m = train(ds, cfg, 1);
  CHECK(m.trees.empty());
  CHECK(predict_proba(m, std::vector<double>{5.0}) == Catch::Approx(sigmoid(0.7)));
}

TEST_CASE("depth-1 single round matches the exhaustive stump oracle") {
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    Dataset ds;
    ds.feature_len = 3;
    for (int i = 0; i < 30; ++i) {
      std::vector<double> x{rng.uniform(), rng.uniform(-1.0, 1.0), rng.uniform(0.0, 5.0)};
      const int y = x[2] > 2.5 ? 1 : (rng.uniform() < 0.2 ? 1 : 0);
      ds.samples.push_back({"r" + std::to_string(i), x, y, false});
    }
    // ensure both classes present twice
    ds.samples[0].label = 0;
    ds.samples[1].label = 0;
    ds.samples[2].label = 1;
    ds.samples[3].label = 1;

    GbdtConfig cfg;
    cfg.n_rounds = 1;
    cfg.max_depth = 1;
    const GbdtModel m = train(ds, cfg, 0);
    const StumpChoice oracle = stump_oracle(ds, cfg);
    REQUIRE(m.trees.size() == 1);
    const Tree& t = m.trees[0];
    REQUIRE(t.nodes[0].feature >= 0);
    CHECK(t.nodes[0].feature == oracle.feature);
    CHECK(t.nodes[0].threshold == Catch::Approx(oracle.threshold).margin(1e-15));
    CHECK(t.nodes[static_cast<size_t>(t.nodes[0].left)].weight == Catch::Approx(oracle.wl).margin(1e-12));
    CHECK(t.nodes[static_cast<size_t>(t.nodes[0].right)].weight == Catch::Approx(oracle.wr).margin(1e-12));
  }
}

TEST_CASE("perfectly separated single feature splits between the classes") {
  Dataset ds = toy_1d({0.0, 0.5, 1.0, 4.0, 4.5, 5.0}, {0, 0, 0, 1, 1, 1});
  GbdtConfig cfg;
  cfg.n_rounds = 1;
  cfg.max_depth = 1;
  const GbdtModel m = train(ds, cfg, 0);
  const TreeNode& root = m.trees[0].nodes[0];
  CHECK(root.feature == 0);
  CHECK(root.threshold > 1.0);
  CHECK(root.threshold < 4.0);
  CHECK(root.threshold == Catch::Approx(2.5));  // midpoint rule
}

TEST_CASE("training loss is non-increasing on a separable set") {
  Rng rng(11);
  Dataset ds;
  ds.feature_len = 2;
  for (int i = 0; i < 80; ++i) {
    const int y = i % 2;
    ds.samples.push_back({"s" + std::to_string(i),
                          {rng.gaussian() + (y ? 2.0 : -2.0), rng.gaussian()},
                          y,
                          false});
  }
  GbdtConfig cfg;
  cfg.n_rounds = 60;
  std::vector<double> losses;
  train(ds, cfg, 0, &losses);
  REQUIRE(losses.size() == 60);
  for (size_t i = 1; i < losses.size(); ++i) CHECK(losses[i] <= losses[i - 1] + 1e-12);
  // separable toy set: every training point ends on the correct side
  const GbdtModel m = train(ds, cfg, 0);
  for (const auto& s : ds.samples)
    CHECK((predict_proba(m, s.x) > 0.5 ? 1 : 0) == s.label);
}

TEST_CASE("train is deterministic and order-insensitive for distinct values") {
  Rng rng(13);
  Dataset ds;
  ds.feature_len = 4;
  for (int i = 0; i < 40; ++i) {
    std::vector<double> x(4);
    for (auto& v : x) v = rng.uniform();
    ds.samples.push_back({"s" + std::to_string(i), x, i % 2, false});
  }
  GbdtConfig cfg;
  cfg.n_rounds = 10;
  const GbdtModel a = train(ds, cfg, 42);
  const GbdtModel b = train(ds, cfg, 42);
  CHECK(model_to_json(a) == model_to_json(b));

  Dataset perm = ds;
  Rng shuffle_rng(42);
  shuffle_rng.shuffle(perm.samples);
  const GbdtModel c = train(perm, cfg, 42);
  CHECK(model_to_json(a).at("trees") == model_to_json(c).at("trees"));
}

TEST_CASE("monotone probability under an extra positive tree") {
  GbdtModel m;
  m.feature_len = 1;
  m.config.base_score = 0.2;
  const double before = predict_proba(m, std::vector<double>{0.0});
  Tree t;
  t.nodes.push_back(TreeNode{-1, 0.0, -1, -1, 0.9});
  m.trees.push_back(t);
  CHECK(predict_proba(m, std::vector<double>{0.0}) > before);
}

TEST_CASE("input validation") {
  Dataset ds = toy_1d({0.0, 1.0, 2.0}, {0, 0, 1});
  GbdtConfig cfg;
  try {
    train(ds, cfg, 0);
    FAIL("expected DegenerateDataset");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_dataset);
  }
  Dataset nan_ds = toy_1d({0.0, 1.0, 2.0, std::nan("")}, {0, 0, 1, 1});
  try {
    train(nan_ds, cfg, 0);
    FAIL("expected NonFiniteFeature");
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_finite_feature);
  }
  GbdtModel m;
  m.feature_len = 3;
  try {
    predict_proba(m, std::vector<double>{1.0});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == errc::length_mismatch);
  }
}

TEST_CASE("model JSON round trip preserves predictions") {
  Rng rng(3);
  Dataset ds;
  ds.feature_len = 3;
  for (int i = 0; i < 30; ++i) {
    std::vector<double> x{rng.uniform(), rng.uniform(), rng.uniform()};
    ds.samples.push_back({"s" + std::to_string(i), x, x[1] > 0.5 ? 1 : 0, false});
  }
  GbdtConfig cfg;
  cfg.n_rounds = 8;
  const GbdtModel m = train(ds, cfg, 0);
  const GbdtModel back = model_from_json(model_to_json(m));
  for (const auto& s : ds.samples)
    CHECK(predict_proba(back, s.x) == predict_proba(m, s.x));

  nlohmann::json broken = model_to_json(m);
  broken["schema_version"] = 99;
  try {
    model_from_json(broken);
    FAIL("expected BadFormat");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_format);
  }
}

TEST_CASE("fuse concatenates deep then hand") {
  std::vector<double> deep(2048, 0.5);
  deep[0] = -1.0;
  const std::vector<double> hand{1.0, 2.0, 3.0, 4.0};
  const auto fused = fuse(deep, hand);
  REQUIRE(fused.size() == 2052);
  CHECK(fused[0] == -1.0);
  CHECK(fused[2048] == 1.0);
  CHECK(fused[2051] == 4.0);

  std::vector<double> short_deep(2047, 0.0);
  try {
    fuse(short_deep, hand);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == errc::length_mismatch);
  }
  // ablation arity
  const auto tiny = fuse(std::vector<double>{1.0, 2.0}, hand, 2, 4);
  CHECK(tiny.size() == 6);
}
