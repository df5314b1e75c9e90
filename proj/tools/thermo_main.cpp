// thermo: contour-based nonlinear features, DDPM schedule math, generative
// metrics and boosted-tree classification over thermogram-style inputs.
//
// Every subcommand prints a JSON run report (tool version, config echo,
// seed, outputs) to stdout and writes artifacts atomically, so identical
// seeds give byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "thermo/crossval.hpp"
#include "thermo/dataset.hpp"
#include "thermo/diffusion.hpp"
#include "thermo/genmetrics.hpp"
#include "thermo/io.hpp"
#include "thermo/nlfeatures.hpp"
#include "thermo/svg.hpp"
#include "thermo/synth.hpp"
#include "thermo/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace thermo;

namespace {

json base_report(const std::string& subcommand, std::uint64_t seed) {
  json j;
  j["tool"] = "thermo";
  j["version"] = kVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["subcommand"] = subcommand;
  j["seed"] = seed;
  return j;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

BinaryMask load_mask(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return read_csv_mask(path);
  return read_mask_pgm(path);
}

GrayImage load_image(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return read_csv_image(path);
  return read_pgm(path);
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

json fold_json(int index, const FoldMetrics& m) {
  json f;
  f["fold"] = index;
  f["tp"] = m.tp;
  f["tn"] = m.tn;
  f["fp"] = m.fp;
  f["fn"] = m.fn;
  f["accuracy"] = m.accuracy;
  f["sensitivity"] = m.sensitivity_defined ? json(m.sensitivity) : json(nullptr);
  f["specificity"] = m.specificity_defined ? json(m.specificity) : json(nullptr);
  return f;
}

json summary_json(const MetricSummary& s) {
  json j;
  j["mean"] = s.defined ? json(s.mean) : json(nullptr);
  j["std"] = s.defined ? json(s.stddev) : json(nullptr);
  return j;
}

struct ClassifyFiles {
  std::string deep, hand, labels, mode = "fused";

  void add_options(CLI::App* cmd) {
    cmd->add_option("--deep", deep, "deep-feature CSV (id,label,f0..fN)");
    cmd->add_option("--hand", hand, "hand-feature CSV (id,bcd,lle,le,apen)");
    cmd->add_option("--labels", labels, "label CSV (id,label); required when no deep file");
    cmd->add_option("--mode", mode, "feature set: fused|deep|hand")
        ->check(CLI::IsMember({"fused", "deep", "hand"}));
  }

  Dataset load() const {
    const FeatureMode fm = parse_mode(mode);
    std::optional<std::vector<DeepRow>> deep_rows;
    std::optional<std::vector<HandRow>> hand_rows;
    std::optional<std::map<std::string, int>> label_map;
    if (!deep.empty()) deep_rows = read_deep_csv(deep);
    if (!hand.empty()) hand_rows = read_hand_csv(hand);
    if (!labels.empty()) label_map = read_labels_csv(labels);
    return build_dataset(fm, deep_rows ? &*deep_rows : nullptr, hand_rows ? &*hand_rows : nullptr,
                         label_map ? &*label_map : nullptr);
  }

  json echo() const {
    return json{{"deep", deep}, {"hand", hand}, {"labels", labels}, {"mode", mode}};
  }
};

struct GbdtFlags {
  GbdtConfig cfg;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--rounds", cfg.n_rounds, "boosting rounds")->capture_default_str();
    cmd->add_option("--eta", cfg.eta, "shrinkage")->capture_default_str();
    cmd->add_option("--max-depth", cfg.max_depth, "tree depth limit")->capture_default_str();
    cmd->add_option("--lambda", cfg.reg_lambda, "L2 leaf regularizer")->capture_default_str();
    cmd->add_option("--gamma", cfg.gamma, "split penalty")->capture_default_str();
    cmd->add_option("--base-score", cfg.base_score, "prior logit")->capture_default_str();
  }

  json echo() const {
    return json{{"rounds", cfg.n_rounds},   {"eta", cfg.eta},     {"max_depth", cfg.max_depth},
                {"lambda", cfg.reg_lambda}, {"gamma", cfg.gamma}, {"base_score", cfg.base_score}};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermogram nonlinear-feature and diffusion toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- features ----
  auto* cmd_features = app.add_subcommand("features", "nonlinear features from tumor masks");
  std::vector<std::string> feat_masks;
  std::string feat_out;
  std::uint64_t feat_seed = 0;
  cmd_features->add_option("--mask", feat_masks, "mask file(s), PGM or CSV")->required();
  cmd_features->add_option("--out", feat_out, "output feature CSV")->required();
  cmd_features->add_option("--seed", feat_seed, "echoed in the report; extraction is deterministic");
  cmd_features->callback([&] {
    std::vector<std::pair<std::string, NonlinearFeatures>> rows;
    for (const auto& path : feat_masks)
      rows.emplace_back(stem_of(path), extract_features(load_mask(path)));
    write_file_atomic(feat_out, encode_features_csv(rows));
    json rep = base_report("features", feat_seed);
    rep["config"] = {{"masks", feat_masks}, {"apen_m", 2}, {"apen_r_factor", 0.2},
                     {"tau", 1},            {"le_m", 3},   {"lle_m_set", {2, 3, 4, 5}}};
    rep["outputs"] = {feat_out};
    emit(rep);
  });

  // ---- signal ----
  auto* cmd_signal = app.add_subcommand("signal", "radial boundary signal from a mask");
  std::string sig_mask, sig_out, sig_svg;
  std::uint64_t sig_seed = 0;
  cmd_signal->add_option("--mask", sig_mask, "mask file, PGM or CSV")->required();
  cmd_signal->add_option("--out", sig_out, "output CSV (single column 'r')")->required();
  cmd_signal->add_option("--svg", sig_svg, "optional SVG plot of the signal");
  cmd_signal->add_option("--seed", sig_seed, "echoed in the report");
  cmd_signal->callback([&] {
    const Contour c = trace_contour(load_mask(sig_mask));
    const RadialSignal sig = radial_signal(c);
    write_file_atomic(sig_out, encode_radial_csv(sig.values));
    json rep = base_report("signal", sig_seed);
    rep["config"] = {{"mask", sig_mask}};
    rep["centroid"] = {sig.cx, sig.cy};
    rep["length"] = sig.values.size();
    json outs = json::array({sig_out});
    if (!sig_svg.empty()) {
      write_file_atomic(sig_svg, svg_line_plot(sig.values, "radial signal " + stem_of(sig_mask)));
      outs.push_back(sig_svg);
    }
    rep["outputs"] = outs;
    emit(rep);
  });

  // ---- diffuse ----
  auto* cmd_diffuse = app.add_subcommand("diffuse", "sample from the DDPM chain");
  int dif_steps = 1000, dif_w = 64, dif_h = 64;
  double dif_b0 = 1e-4, dif_b1 = 0.02;
  std::uint64_t dif_seed = 0;
  std::string dif_cond = "normal", dif_out, dif_schedule_csv, dif_raw_csv, dif_denoiser = "gaussian";
  double dif_mean = std::numeric_limits<double>::quiet_NaN();
  double dif_std = std::numeric_limits<double>::quiet_NaN();
  cmd_diffuse->add_option("--steps", dif_steps, "diffusion steps T")->capture_default_str();
  cmd_diffuse->add_option("--beta-start", dif_b0, "linear schedule start")->capture_default_str();
  cmd_diffuse->add_option("--beta-end", dif_b1, "linear schedule end")->capture_default_str();
  cmd_diffuse->add_option("--seed", dif_seed, "RNG seed")->capture_default_str();
  cmd_diffuse->add_option("--cond", dif_cond, "class condition")
      ->check(CLI::IsMember({"normal", "malignant"}));
  cmd_diffuse->add_option("--width", dif_w, "sample width")->capture_default_str();
  cmd_diffuse->add_option("--height", dif_h, "sample height")->capture_default_str();
  cmd_diffuse->add_option("--out", dif_out, "output PGM")->required();
  cmd_diffuse->add_option("--schedule-csv", dif_schedule_csv, "write the schedule as t,beta,alpha_bar");
  cmd_diffuse->add_option("--raw-csv", dif_raw_csv, "write the raw sample as a CSV matrix");
  cmd_diffuse->add_option("--denoiser", dif_denoiser, "built-in denoiser")
      ->check(CLI::IsMember({"gaussian", "zero"}));
  cmd_diffuse->add_option("--target-mean", dif_mean, "override the selected class target mean");
  cmd_diffuse->add_option("--target-std", dif_std, "override the selected class target std");
  cmd_diffuse->callback([&] {
    const NoiseSchedule sched = linear_schedule(dif_steps, dif_b0, dif_b1);
    const Cond cond = dif_cond == "normal" ? Cond::normal : Cond::malignant;
    GaussianTarget targ_normal{0.35, 0.10}, targ_malignant{0.65, 0.15};
    GaussianTarget& selected = cond == Cond::normal ? targ_normal : targ_malignant;
    if (!std::isnan(dif_mean)) selected.mean = dif_mean;
    if (!std::isnan(dif_std)) selected.stddev = dif_std;
    std::unique_ptr<Denoiser> den;
    if (dif_denoiser == "zero")
      den = std::make_unique<ZeroDenoiser>();
    else
      den = std::make_unique<GaussianOptimalDenoiser>(sched, targ_normal, targ_malignant);
    Rng rng(dif_seed);
    const Tensor2D x0 = sample(*den, dif_w, dif_h, cond, sched, rng);
    write_pgm(dif_out, x0);
    json rep = base_report("diffuse", dif_seed);
    rep["config"] = {{"steps", dif_steps},     {"beta_start", dif_b0},
                     {"beta_end", dif_b1},     {"cond", dif_cond},
                     {"width", dif_w},         {"height", dif_h},
                     {"denoiser", dif_denoiser},
                     {"target_mean", selected.mean}, {"target_std", selected.stddev}};
    json outs = json::array({dif_out});
    if (!dif_schedule_csv.empty()) {
      write_file_atomic(dif_schedule_csv, encode_schedule_csv(sched));
      outs.push_back(dif_schedule_csv);
    }
    if (!dif_raw_csv.empty()) {
      std::string csv;
      for (int y = 0; y < x0.height; ++y) {
        for (int x = 0; x < x0.width; ++x) {
          csv += fmt17(x0.at(x, y));
          csv += (x + 1 < x0.width) ? ',' : '\n';
        }
      }
      write_file_atomic(dif_raw_csv, csv);
      outs.push_back(dif_raw_csv);
    }
    rep["outputs"] = outs;
    emit(rep);
  });

  // ---- metrics ----
  auto* cmd_metrics = app.add_subcommand("metrics", "generative evaluation metrics");
  cmd_metrics->require_subcommand(1);
  std::string fid_real, fid_gen, is_probs, met_out;
  int is_splits = 1;
  std::uint64_t met_seed = 0;
  auto add_fid = [&](const char* name, const char* help) {
    auto* c = cmd_metrics->add_subcommand(name, help);
    c->add_option("--real", fid_real, "real-feature CSV (headerless n x d)")->required();
    c->add_option("--gen", fid_gen, "generated-feature CSV (headerless n x d)")->required();
    c->add_option("--out", met_out, "optional JSON report file");
    c->add_option("--seed", met_seed, "echoed in the report");
    return c;
  };
  auto run_fid = [&](const std::string& name) {
    const auto a = to_matrix(read_csv_matrix(fid_real));
    const auto b = to_matrix(read_csv_matrix(fid_gen));
    const double v = sliced_fid(a, b);
    json rep = base_report("metrics " + name, met_seed);
    rep["config"] = {{"real", fid_real}, {"gen", fid_gen}};
    rep[name] = v;
    if (!met_out.empty()) {
      write_file_atomic(met_out, rep.dump(2) + "\n");
      rep["outputs"] = {met_out};
    }
    emit(rep);
  };
  add_fid("fid", "Frechet distance between Gaussian fits of two embedding sets")
      ->callback([&] { run_fid("fid"); });
  add_fid("sfid", "same Frechet computation on intermediate-layer embeddings")
      ->callback([&] { run_fid("sfid"); });
  auto* cmd_is = cmd_metrics->add_subcommand("is", "inception score of a probability matrix");
  cmd_is->add_option("--probs", is_probs, "headerless n x C CSV of class probabilities")->required();
  cmd_is->add_option("--splits", is_splits, "number of contiguous splits")->capture_default_str();
  cmd_is->add_option("--out", met_out, "optional JSON report file");
  cmd_is->add_option("--seed", met_seed, "echoed in the report");
  cmd_is->callback([&] {
    ProbMatrix pm{to_matrix(read_csv_matrix(is_probs))};
    const auto [mean, stddev] = inception_score(pm, is_splits);
    json rep = base_report("metrics is", met_seed);
    rep["config"] = {{"probs", is_probs}, {"splits", is_splits}};
    rep["is_mean"] = mean;
    rep["is_std"] = stddev;
    if (!met_out.empty()) {
      write_file_atomic(met_out, rep.dump(2) + "\n");
      rep["outputs"] = {met_out};
    }
    emit(rep);
  });

  // ---- train ----
  auto* cmd_train = app.add_subcommand("train", "fit the boosted-tree classifier");
  ClassifyFiles train_files;
  GbdtFlags train_flags;
  std::string train_model_out, train_loss_csv;
  std::uint64_t train_seed = 0;
  train_files.add_options(cmd_train);
  train_flags.add_options(cmd_train);
  cmd_train->add_option("--seed", train_seed, "training seed")->capture_default_str();
  cmd_train->add_option("--model-out", train_model_out, "model JSON path")->required();
  cmd_train->add_option("--loss-csv", train_loss_csv, "per-round training loss CSV");
  cmd_train->callback([&] {
    const Dataset ds = train_files.load();
    std::vector<double> losses;
    const GbdtModel model = train(ds, train_flags.cfg, train_seed, &losses);
    write_file_atomic(train_model_out, model_to_json(model).dump(2) + "\n");
    json rep = base_report("train", train_seed);
    rep["config"] = train_files.echo();
    rep["config"]["gbdt"] = train_flags.echo();
    rep["samples"] = ds.samples.size();
    rep["feature_len"] = ds.feature_len;
    rep["final_train_loss"] = losses.empty() ? json(nullptr) : json(losses.back());
    json outs = json::array({train_model_out});
    if (!train_loss_csv.empty()) {
      std::string csv = "round,loss\n";
      for (size_t i = 0; i < losses.size(); ++i)
        csv += std::to_string(i + 1) + "," + fmt17(losses[i]) + "\n";
      write_file_atomic(train_loss_csv, csv);
      outs.push_back(train_loss_csv);
    }
    rep["outputs"] = outs;
    emit(rep);
  });

  // ---- cv ----
  auto* cmd_cv = app.add_subcommand("cv", "stratified k-fold cross-validation");
  ClassifyFiles cv_files;
  GbdtFlags cv_flags;
  int cv_folds = 5;
  std::uint64_t cv_seed = 0;
  bool cv_include_synth = false;
  std::string cv_out;
  cv_files.add_options(cmd_cv);
  cv_flags.add_options(cmd_cv);
  cmd_cv->add_option("--folds", cv_folds, "fold count")->capture_default_str();
  cmd_cv->add_option("--seed", cv_seed, "fold-shuffle and training seed")->capture_default_str();
  cmd_cv->add_flag("--include-synthetic-in-eval", cv_include_synth,
                   "let synth-tagged ids enter held-out folds");
  cmd_cv->add_option("--out", cv_out, "optional JSON report file");
  cmd_cv->callback([&] {
    const Dataset ds = cv_files.load();
    CvOptions opts;
    opts.include_synthetic_in_eval = cv_include_synth;
    const CvSummary cv = stratified_kfold(ds, cv_folds, cv_flags.cfg, cv_seed, opts);
    json rep = base_report("cv", cv_seed);
    rep["config"] = cv_files.echo();
    rep["config"]["gbdt"] = cv_flags.echo();
    rep["config"]["folds"] = cv_folds;
    rep["config"]["include_synthetic_in_eval"] = cv_include_synth;
    rep["config"]["threshold"] = 0.5;
    json folds = json::array();
    for (size_t i = 0; i < cv.folds.size(); ++i)
      folds.push_back(fold_json(static_cast<int>(i), cv.folds[i]));
    rep["folds"] = folds;
    rep["accuracy"] = summary_json(cv.accuracy);
    rep["sensitivity"] = summary_json(cv.sensitivity);
    rep["specificity"] = summary_json(cv.specificity);
    if (!cv_out.empty()) {
      write_file_atomic(cv_out, rep.dump(2) + "\n");
      rep["outputs"] = {cv_out};
    }
    emit(rep);
  });

  // ---- predict ----
  auto* cmd_predict = app.add_subcommand("predict", "score samples with a trained model");
  ClassifyFiles pred_files;
  std::string pred_model, pred_out;
  std::uint64_t pred_seed = 0;
  pred_files.add_options(cmd_predict);
  cmd_predict->add_option("--model", pred_model, "model JSON from 'train'")->required();
  cmd_predict->add_option("--out", pred_out, "predictions CSV")->required();
  cmd_predict->add_option("--seed", pred_seed, "echoed in the report");
  cmd_predict->callback([&] {
    const GbdtModel model = model_from_json(nlohmann::json::parse(read_file(pred_model)));
    const Dataset ds = pred_files.load();
    if (ds.feature_len != model.feature_len)
      fail(errc::length_mismatch,
           "dataset has " + std::to_string(ds.feature_len) + " features, model expects " +
               std::to_string(model.feature_len));
    std::string csv = "id,probability,prediction\n";
    for (const auto& s : ds.samples) {
      const double p = predict_proba(model, s.x);
      csv += s.id + "," + fmt17(p) + "," + (p > 0.5 ? "1" : "0") + "\n";
    }
    write_file_atomic(pred_out, csv);
    json rep = base_report("predict", pred_seed);
    rep["config"] = pred_files.echo();
    rep["config"]["model"] = pred_model;
    rep["samples"] = ds.samples.size();
    rep["outputs"] = {pred_out};
    emit(rep);
  });

  // ---- synth ----
  auto* cmd_synth = app.add_subcommand("synth", "oracle generators for validation");
  cmd_synth->require_subcommand(1);

  auto* sc = cmd_synth->add_subcommand("contour", "benign/malignant-style lesion outline");
  std::string sc_class = "benign", sc_mask_out, sc_contour_csv, sc_signal_csv;
  double sc_radius = 80.0, sc_amp = 0.1, sc_decay = 1.0;
  int sc_npoints = 256;
  std::uint64_t sc_seed = 0;
  sc->add_option("--class", sc_class, "contour class")->check(CLI::IsMember({"benign", "malignant"}));
  sc->add_option("--base-radius", sc_radius, "mean radius, pixels")->capture_default_str();
  sc->add_option("--n-points", sc_npoints, "harmonic budget")->capture_default_str();
  sc->add_option("--amp", sc_amp, "peak relative deviation")->capture_default_str();
  sc->add_option("--decay", sc_decay, "malignant spectral decay exponent")->capture_default_str();
  sc->add_option("--seed", sc_seed, "generator seed")->capture_default_str();
  sc->add_option("--mask-out", sc_mask_out, "mask PGM path")->required();
  sc->add_option("--contour-csv", sc_contour_csv, "traced contour x,y CSV");
  sc->add_option("--signal-csv", sc_signal_csv, "radial signal CSV");
  sc->callback([&] {
    ContourParams p;
    p.class_kind = sc_class == "benign" ? ContourClass::benign : ContourClass::malignant;
    p.base_radius = sc_radius;
    p.n_points = sc_npoints;
    p.amp = sc_amp;
    p.spectral_decay = sc_decay;
    p.seed = sc_seed;
    const SynthContour c = gen_contour(p);
    write_mask_pgm(sc_mask_out, c.mask);
    json rep = base_report("synth contour", sc_seed);
    rep["config"] = {{"class", sc_class}, {"base_radius", sc_radius}, {"n_points", sc_npoints},
                     {"amp", sc_amp},     {"decay", sc_decay}};
    rep["contour_points"] = c.contour.points.size();
    json outs = json::array({sc_mask_out});
    if (!sc_contour_csv.empty()) {
      std::string csv;
      for (const auto& pt : c.contour.points)
        csv += std::to_string(pt.x) + "," + std::to_string(pt.y) + "\n";
      write_file_atomic(sc_contour_csv, csv);
      outs.push_back(sc_contour_csv);
    }
    if (!sc_signal_csv.empty()) {
      write_file_atomic(sc_signal_csv, encode_radial_csv(radial_signal(c.contour).values));
      outs.push_back(sc_signal_csv);
    }
    rep["outputs"] = outs;
    emit(rep);
  });

  auto* sk = cmd_synth->add_subcommand("koch", "Koch curve vertex set");
  int sk_level = 6;
  std::string sk_out;
  std::uint64_t sk_seed = 0;
  sk->add_option("--level", sk_level, "recursion level, 0..8")->capture_default_str();
  sk->add_option("--out", sk_out, "points CSV (x,y per row)")->required();
  sk->add_option("--seed", sk_seed, "echoed in the report");
  sk->callback([&] {
    const auto pts = koch_curve(sk_level);
    std::string csv;
    for (const auto& p : pts) csv += fmt17(p.x) + "," + fmt17(p.y) + "\n";
    write_file_atomic(sk_out, csv);
    json rep = base_report("synth koch", sk_seed);
    rep["config"] = {{"level", sk_level}};
    rep["points"] = pts.size();
    rep["outputs"] = {sk_out};
    emit(rep);
  });

  auto make_series_writer = [&](const std::string& name, std::uint64_t seed,
                                const std::vector<double>& series, const std::string& out,
                                json config) {
    std::string csv = "x\n";
    for (double v : series) csv += fmt17(v) + "\n";
    write_file_atomic(out, csv);
    json rep = base_report("synth " + name, seed);
    rep["config"] = std::move(config);
    rep["length"] = series.size();
    rep["outputs"] = {out};
    emit(rep);
  };

  auto* sl = cmd_synth->add_subcommand("logistic", "logistic-map series");
  double sl_r = 4.0, sl_x0 = 0.4;
  int sl_n = 5000, sl_burn = 100;
  std::string sl_out;
  std::uint64_t sl_seed = 0;
  sl->add_option("--r", sl_r, "map parameter in (0,4]")->capture_default_str();
  sl->add_option("--n", sl_n, "samples")->capture_default_str();
  sl->add_option("--x0", sl_x0, "initial state in (0,1)")->capture_default_str();
  sl->add_option("--burn-in", sl_burn, "discarded iterations")->capture_default_str();
  sl->add_option("--out", sl_out, "series CSV")->required();
  sl->add_option("--seed", sl_seed, "echoed in the report");
  sl->callback([&] {
    make_series_writer("logistic", sl_seed, logistic_series(sl_r, sl_n, sl_x0, sl_burn), sl_out,
                       json{{"r", sl_r}, {"n", sl_n}, {"x0", sl_x0}, {"burn_in", sl_burn}});
  });

  auto* sh = cmd_synth->add_subcommand("henon", "Henon-map x series");
  double sh_a = 1.4, sh_b = 0.3;
  int sh_n = 5000, sh_burn = 200;
  std::string sh_out;
  std::uint64_t sh_seed = 0;
  sh->add_option("--a", sh_a, "quadratic coefficient")->capture_default_str();
  sh->add_option("--b", sh_b, "contraction")->capture_default_str();
  sh->add_option("--n", sh_n, "samples")->capture_default_str();
  sh->add_option("--burn-in", sh_burn, "discarded iterations")->capture_default_str();
  sh->add_option("--out", sh_out, "series CSV")->required();
  sh->add_option("--seed", sh_seed, "echoed in the report");
  sh->callback([&] {
    make_series_writer("henon", sh_seed, henon_series(sh_n, sh_a, sh_b, sh_burn), sh_out,
                       json{{"a", sh_a}, {"b", sh_b}, {"n", sh_n}, {"burn_in", sh_burn}});
  });

  auto* sn = cmd_synth->add_subcommand("noise", "standardized uniform white noise");
  int sn_n = 1000;
  std::string sn_out;
  std::uint64_t sn_seed = 0;
  sn->add_option("--n", sn_n, "samples")->capture_default_str();
  sn->add_option("--seed", sn_seed, "generator seed")->capture_default_str();
  sn->add_option("--out", sn_out, "series CSV")->required();
  sn->callback([&] {
    make_series_writer("noise", sn_seed, white_noise(sn_n, sn_seed), sn_out,
                       json{{"n", sn_n}});
  });

  auto* ss = cmd_synth->add_subcommand("sine", "pure sine series");
  int ss_n = 1000;
  double ss_period = 40.0;
  std::string ss_out;
  std::uint64_t ss_seed = 0;
  ss->add_option("--n", ss_n, "samples")->capture_default_str();
  ss->add_option("--period", ss_period, "period in samples")->capture_default_str();
  ss->add_option("--out", ss_out, "series CSV")->required();
  ss->add_option("--seed", ss_seed, "echoed in the report");
  ss->callback([&] {
    make_series_writer("sine", ss_seed, sine_wave(ss_n, ss_period), ss_out,
                       json{{"n", ss_n}, {"period", ss_period}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
