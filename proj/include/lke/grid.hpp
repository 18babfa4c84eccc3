#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lke {

struct Axis {
  double min;
  double max;
  double spacing;

  std::size_t count() const {
    return static_cast<std::size_t>(std::llround((max - min) / spacing)) + 1;
  }
  double at(std::size_t i) const { return min + spacing * double(i); }
};

// Regular rectangular grid of real values, row-major in x.
struct Grid2D {
  Axis x_axis;
  Axis y_axis;
  std::vector<double> values;

  double& at(std::size_t ix, std::size_t iy) {
    return values[ix * y_axis.count() + iy];
  }
  double at(std::size_t ix, std::size_t iy) const {
    return values[ix * y_axis.count() + iy];
  }
};

}  // namespace lke
