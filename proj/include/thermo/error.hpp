#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

// Failure categories used across the library. Tests match on the code,
// messages are for humans.
enum class errc {
  constant_image,
  empty_mask,
  degenerate_contour,
  insufficient_boundary,
  shape_mismatch,
  step_out_of_range,
  invalid_range,
  invalid_params,
  signal_too_short,
  no_valid_neighbors,
  zero_variance,
  degenerate_point_set,
  level_out_of_range,
  divergence,
  too_few_samples,
  dimension_mismatch,
  not_psd,
  invalid_rows,
  length_mismatch,
  empty_input,
  degenerate_dataset,
  non_finite_feature,
  too_few_samples_per_class,
  self_intersection,
  bad_format,
  io_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::constant_image: return "ConstantImage";
    case errc::empty_mask: return "EmptyMask";
    case errc::degenerate_contour: return "DegenerateContour";
    case errc::insufficient_boundary: return "InsufficientBoundary";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::step_out_of_range: return "StepOutOfRange";
    case errc::invalid_range: return "InvalidRange";
    case errc::invalid_params: return "InvalidParams";
    case errc::signal_too_short: return "SignalTooShort";
    case errc::no_valid_neighbors: return "NoValidNeighbors";
    case errc::zero_variance: return "ZeroVariance";
    case errc::degenerate_point_set: return "DegeneratePointSet";
    case errc::level_out_of_range: return "LevelOutOfRange";
    case errc::divergence: return "Divergence";
    case errc::too_few_samples: return "TooFewSamples";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_psd: return "NotPSD";
    case errc::invalid_rows: return "InvalidRows";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::empty_input: return "Empty";
    case errc::degenerate_dataset: return "DegenerateDataset";
    case errc::non_finite_feature: return "NonFiniteFeature";
    case errc::too_few_samples_per_class: return "TooFewSamplesPerClass";
    case errc::self_intersection: return "SelfIntersection";
    case errc::bad_format: return "BadFormat";
    case errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace thermo
