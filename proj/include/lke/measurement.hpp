#pragma once

#include <utility>
#include <vector>

#include "lke/kernel.hpp"

namespace lke {

struct EmptyShell : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroMass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Momenta compatible with a residual-energy measurement E_m: the ellipse
// k1^2 + k1 k2 + k2^2 = E - E_m clipped to the square [-k0,k0]^2.
struct EnergyShell {
  double E;
  double E_m;
  double k0;

  EnergyShell(double E_, double E_m_, double k0_);
  double radius_sq() const { return E - E_m; }
};

// Relative-coordinate density cos^2(k_m (x + x12)) of the two-body state
// after an exact residual-energy measurement; periodic, never decaying.
double post_measurement_density_2body(double x, double k_m, double x12 = 0.0);

// Ellipse points at uniform angular parameter, discarding those outside
// the square. E_m = E collapses to the single point (0,0).
std::vector<std::pair<double, double>> shell_points(const EnergyShell& shell,
                                                    std::size_t count);

// |sum over shell points of e^{i(k1 xx1 + k2 xx2)}|^2, equal weights.
double post_measurement_density_3body(
    double xx1, double xx2, const std::vector<std::pair<double, double>>& pts);

struct PositionDensity1D {
  std::vector<std::pair<double, double>> samples;  // (coordinate, density)
};

// Smallest symmetric interval about the peak holding half the sampled
// mass; scale invariant, at least one sample spacing wide.
double width_metric(const PositionDensity1D& d);

struct SliceSpec {
  double x_min = -40.0;
  double x_max = 40.0;
  double spacing = 0.25;
  std::size_t shell_count = 720;
};

// (E_m, W) pairs from the three-body post-measurement density on the
// xx2 = 0 slice.
std::vector<std::pair<double, double>> broadening_curve(
    const std::vector<double>& E_values, const KernelParams& p,
    const SliceSpec& slice = {});

}  // namespace lke
