#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

// Row-major 2-D buffer. Used for grayscale images, binary masks and
// diffusion-state tensors alike.
template <typename T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int w, int h, T fill = T{}) : width(w), height(h) {
    if (w < 1 || h < 1) fail(errc::invalid_range, "grid dims must be >= 1");
    data.assign(static_cast<size_t>(w) * h, fill);
  }

  T& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  const T& at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  size_t size() const { return data.size(); }

  bool same_shape(const Grid& o) const {
    return width == o.width && height == o.height;
  }
};

using GrayImage = Grid<double>;
using BinaryMask = Grid<std::uint8_t>;
using Tensor2D = Grid<double>;

}  // namespace thermo
