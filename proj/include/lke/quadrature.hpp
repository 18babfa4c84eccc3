#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lke {

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : QuadratureError {
  using QuadratureError::QuadratureError;
};

struct NonFinite : QuadratureError {
  using QuadratureError::QuadratureError;
};

struct TooFewSamples : QuadratureError {
  using QuadratureError::QuadratureError;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Adaptive bisecting Gauss-Kronrod (7-15 pair) on a finite interval.
QuadratureResult integrate_1d(const Integrand1D& f, double a, double b,
                              const Tolerance& tol = {});

// Nested adaptive quadrature over the rectangle [ax,bx] x [ay,by].
QuadratureResult integrate_2d_product(const Integrand2D& f, double ax,
                                      double bx, double ay, double by,
                                      const Tolerance& tol = {});

// Composite Simpson on equally spaced tabulated samples; a trailing
// trapezoid panel absorbs an even sample count.
double integrate_grid(const std::vector<double>& samples, double spacing);

}  // namespace lke
