#pragma once

#include <algorithm>
#include <cmath>

#include "thermo/grid.hpp"

namespace thermo {

// Min-max rescale to [0,1]. Constant images are rejected: mapping them to
// zeros would silently poison downstream statistics.
inline GrayImage normalize_minmax(const GrayImage& img) {
  if (img.data.empty()) fail(errc::invalid_range, "empty image");
  const auto [lo_it, hi_it] = std::minmax_element(img.data.begin(), img.data.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi == lo) fail(errc::constant_image, "max(X) == min(X)");
  GrayImage out(img.width, img.height);
  const double inv = 1.0 / (hi - lo);
  for (size_t i = 0; i < img.data.size(); ++i) out.data[i] = (img.data[i] - lo) * inv;
  return out;
}

// Bilinear resize with corner-aligned sampling: output corners map exactly
// onto input corners. A 1-pixel axis maps everything to coordinate 0.
inline GrayImage resize_bilinear(const GrayImage& img, int w, int h) {
  if (w < 1 || h < 1) fail(errc::invalid_range, "target dims must be >= 1");
  if (img.width == w && img.height == h) return img;
  GrayImage out(w, h);
  const double sx = (w > 1) ? static_cast<double>(img.width - 1) / (w - 1) : 0.0;
  const double sy = (h > 1) ? static_cast<double>(img.height - 1) / (h - 1) : 0.0;
  for (int y = 0; y < h; ++y) {
    const double fy = sy * y;
    int y0 = static_cast<int>(fy);
    y0 = std::min(y0, img.height - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < w; ++x) {
      const double fx = sx * x;
      int x0 = static_cast<int>(fx);
      x0 = std::min(x0, img.width - 1);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;
      const double top = img.at(x0, y0) * (1.0 - wx) + img.at(x1, y0) * wx;
      const double bot = img.at(x0, y1) * (1.0 - wx) + img.at(x1, y1) * wx;
      out.at(x, y) = top * (1.0 - wy) + bot * wy;
    }
  }
  return out;
}

struct Rect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive corners
  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
};

// Tight bounding box of the mask foreground, grown by pad and clamped to
// the mask bounds.
inline Rect roi_bbox(const BinaryMask& mask, int pad) {
  int x0 = mask.width, y0 = mask.height, x1 = -1, y1 = -1;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      if (mask.at(x, y)) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
  if (x1 < 0) fail(errc::empty_mask, "mask has no foreground");
  return Rect{std::max(0, x0 - pad), std::max(0, y0 - pad),
              std::min(mask.width - 1, x1 + pad), std::min(mask.height - 1, y1 + pad)};
}

inline GrayImage crop(const GrayImage& img, const Rect& r) {
  if (r.x0 < 0 || r.y0 < 0 || r.x1 >= img.width || r.y1 >= img.height || r.x0 > r.x1 || r.y0 > r.y1)
    fail(errc::invalid_range, "crop rect outside image");
  GrayImage out(r.width(), r.height());
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) out.at(x, y) = img.at(r.x0 + x, r.y0 + y);
  return out;
}

// ROI crop of a source image around the mask foreground.
inline GrayImage crop_roi(const GrayImage& img, const BinaryMask& mask, int pad) {
  if (img.width != mask.width || img.height != mask.height)
    fail(errc::shape_mismatch, "image and mask dims differ");
  return crop(img, roi_bbox(mask, pad));
}

}  // namespace thermo
