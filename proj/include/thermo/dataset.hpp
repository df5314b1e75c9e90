#pragma once

#include <map>
#include <string>
#include <vector>

#include "thermo/fusion.hpp"
#include "thermo/gbdt.hpp"
#include "thermo/io.hpp"

namespace thermo {

enum class FeatureMode { fused, deep, hand };

inline const char* mode_name(FeatureMode m) {
  switch (m) {
    case FeatureMode::fused: return "fused";
    case FeatureMode::deep: return "deep";
    case FeatureMode::hand: return "hand";
  }
  return "?";
}

inline FeatureMode parse_mode(const std::string& s) {
  if (s == "fused") return FeatureMode::fused;
  if (s == "deep") return FeatureMode::deep;
  if (s == "hand") return FeatureMode::hand;
  fail(errc::invalid_params, "mode must be fused|deep|hand");
}

// ids starting with this prefix mark generated samples; cross-validation
// keeps them out of held-out folds unless asked otherwise
inline constexpr const char* kSyntheticIdPrefix = "synth";

inline bool is_synthetic_id(const std::string& id) {
  return id.rfind(kSyntheticIdPrefix, 0) == 0;
}

struct DeepRow {
  std::string id;
  int label = 0;
  std::vector<double> features;
};

struct HandRow {
  std::string id;
  std::vector<double> features;  // bcd, lle, le, apen
};

// Deep-feature CSV: id,label,f0..fN-1
inline std::vector<DeepRow> read_deep_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) fail(errc::bad_format, path + ": empty file");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "id" || header[1] != "label" || header[2] != "f0")
    fail(errc::bad_format, path + ": expected header id,label,f0,...");
  const size_t nf = header.size() - 2;
  std::vector<DeepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) fail(errc::bad_format, path + ": ragged row");
    DeepRow r;
    r.id = cells[0];
    const double lab = parse_double(cells[1], path);
    if (lab != 0.0 && lab != 1.0) fail(errc::bad_format, path + ": label must be 0/1");
    r.label = static_cast<int>(lab);
    r.features.reserve(nf);
    for (size_t i = 2; i < cells.size(); ++i) r.features.push_back(parse_double(cells[i], path));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) fail(errc::bad_format, path + ": no data rows");
  return rows;
}

// Handcrafted-feature CSV from the nonlinear pipeline: id,bcd,lle,le,apen
inline std::vector<HandRow> read_hand_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) fail(errc::bad_format, path + ": empty file");
  if (split_csv_line(line) != std::vector<std::string>{"id", "bcd", "lle", "le", "apen"})
    fail(errc::bad_format, path + ": expected header id,bcd,lle,le,apen");
  std::vector<HandRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 5) fail(errc::bad_format, path + ": ragged row");
    HandRow r;
    r.id = cells[0];
    for (size_t i = 1; i < 5; ++i) r.features.push_back(parse_double(cells[i], path));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) fail(errc::bad_format, path + ": no data rows");
  return rows;
}

// Label CSV: id,label — used when no deep file carries the labels.
inline std::map<std::string, int> read_labels_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"id", "label"})
    fail(errc::bad_format, path + ": expected header id,label");
  std::map<std::string, int> out;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) fail(errc::bad_format, path + ": ragged row");
    const double lab = parse_double(cells[1], path);
    if (lab != 0.0 && lab != 1.0) fail(errc::bad_format, path + ": label must be 0/1");
    if (!out.emplace(cells[0], static_cast<int>(lab)).second)
      fail(errc::bad_format, path + ": duplicate id " + cells[0]);
  }
  if (out.empty()) fail(errc::bad_format, path + ": no data rows");
  return out;
}

// Joins feature files by id into a training table for the requested mode.
// fused joins deep and hand rows; labels come from the deep file unless a
// label map is supplied.
inline Dataset build_dataset(FeatureMode mode, const std::vector<DeepRow>* deep,
                             const std::vector<HandRow>* hand,
                             const std::map<std::string, int>* labels = nullptr) {
  Dataset ds;
  const auto label_of = [&](const std::string& id, const DeepRow* dr) -> int {
    if (labels) {
      const auto it = labels->find(id);
      if (it == labels->end()) fail(errc::bad_format, "no label for id " + id);
      return it->second;
    }
    if (dr) return dr->label;
    fail(errc::invalid_params, "labels required when no deep file is given");
  };

  if (mode == FeatureMode::deep || mode == FeatureMode::fused) {
    if (!deep) fail(errc::invalid_params, "mode needs a deep-feature file");
    std::map<std::string, const HandRow*> hand_by_id;
    if (mode == FeatureMode::fused) {
      if (!hand) fail(errc::invalid_params, "fused mode needs a hand-feature file");
      for (const auto& h : *hand)
        if (!hand_by_id.emplace(h.id, &h).second)
          fail(errc::bad_format, "duplicate hand id " + h.id);
    }
    for (const auto& d : *deep) {
      Sample s;
      s.id = d.id;
      s.label = label_of(d.id, &d);
      s.synthetic = is_synthetic_id(d.id);
      if (mode == FeatureMode::deep) {
        s.x = d.features;
      } else {
        const auto it = hand_by_id.find(d.id);
        if (it == hand_by_id.end()) fail(errc::bad_format, "no hand features for id " + d.id);
        s.x = fuse(d.features, it->second->features, d.features.size(),
                   it->second->features.size());
      }
      ds.samples.push_back(std::move(s));
    }
  } else {
    if (!hand) fail(errc::invalid_params, "hand mode needs a hand-feature file");
    for (const auto& h : *hand) {
      Sample s;
      s.id = h.id;
      s.label = label_of(h.id, nullptr);
      s.synthetic = is_synthetic_id(h.id);
      s.x = h.features;
      ds.samples.push_back(std::move(s));
    }
  }
  if (ds.samples.empty()) fail(errc::degenerate_dataset, "no samples");
  ds.feature_len = ds.samples.front().x.size();
  for (const auto& s : ds.samples)
    if (s.x.size() != ds.feature_len) fail(errc::length_mismatch, "inconsistent feature lengths");
  return ds;
}

}  // namespace thermo
