#include "lke/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace lke {

EnergyShell::EnergyShell(double E_, double E_m_, double k0_)
    : E(E_), E_m(E_m_), k0(k0_) {
  if (!(k0 > 0)) throw InvalidParams("EnergyShell: k0 must be > 0");
  if (E_m < 0 || E_m > E) {
    throw InvalidParams("EnergyShell: need 0 <= E_m <= E");
  }
}

double post_measurement_density_2body(double x, double k_m, double x12) {
  const double c = std::cos(k_m * (x + x12));
  return c * c;
}

std::vector<std::pair<double, double>> shell_points(const EnergyShell& shell,
                                                    std::size_t count) {
  if (count < 8) throw InvalidParams("shell_points: count must be >= 8");
  const double R = shell.radius_sq();
  if (R <= 0) {
    // Degenerate shell: all momenta pinned to zero.
    return {{0.0, 0.0}};
  }
  // Principal axes of k1^2 + k1 k2 + k2^2: eigenvalue 3/2 along (1,1) and
  // 1/2 along (1,-1). Uniform angle on the ellipse hits the constraint
  // exactly by construction.
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double ra = std::sqrt(R / 1.5);
  const double rb = std::sqrt(R / 0.5);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = 2.0 * std::numbers::pi * double(i) / double(count);
    const double u = ra * std::cos(theta);
    const double v = rb * std::sin(theta);
    const double k1 = (u + v) * inv_sqrt2;
    const double k2 = (u - v) * inv_sqrt2;
    if (std::abs(k1) <= shell.k0 && std::abs(k2) <= shell.k0) {
      pts.emplace_back(k1, k2);
    }
  }
  if (pts.empty()) throw EmptyShell("shell_points: no points inside square");
  return pts;
}

double post_measurement_density_3body(
    double xx1, double xx2,
    const std::vector<std::pair<double, double>>& pts) {
  std::complex<double> sum;
  for (const auto& [k1, k2] : pts) {
    const double phase = k1 * xx1 + k2 * xx2;
    sum += std::complex<double>{std::cos(phase), std::sin(phase)};
  }
  return std::norm(sum);
}

double width_metric(const PositionDensity1D& d) {
  const auto& samples = d.samples;
  if (samples.empty()) throw ZeroMass("width_metric: no samples");
  double total = 0.0;
  double peak_val = 0.0;
  for (const auto& [x, v] : samples) {
    if (v < 0 || !std::isfinite(v)) {
      throw InvalidParams("width_metric: densities must be finite and >= 0");
    }
    total += v;
    peak_val = std::max(peak_val, v);
  }
  if (total <= 0) throw ZeroMass("width_metric: zero total mass");

  // Ties are common (flat densities); take the middle of the argmax set so
  // a uniform density yields its central half.
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second >= peak_val * (1.0 - 1e-12)) ties.push_back(i);
  }
  const double peak_x = samples[ties[ties.size() / 2]].first;

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(samples[i].first - peak_x) <
           std::abs(samples[j].first - peak_x);
  });
  double mass = 0.0;
  double radius = 0.0;
  for (std::size_t i : order) {
    mass += samples[i].second;
    radius = std::abs(samples[i].first - peak_x);
    if (mass >= 0.5 * total) break;
  }
  double spacing = samples.size() > 1
                       ? samples[1].first - samples[0].first
                       : 1.0;
  return std::max(2.0 * radius, spacing);
}

std::vector<std::pair<double, double>> broadening_curve(
    const std::vector<double>& E_values, const KernelParams& p,
    const SliceSpec& slice) {
  p.require_three_body();
  std::vector<std::pair<double, double>> out;
  out.reserve(E_values.size());
  const std::size_t n =
      static_cast<std::size_t>(
          std::llround((slice.x_max - slice.x_min) / slice.spacing)) +
      1;
  for (double E_m : E_values) {
    EnergyShell shell{p.E, E_m, p.k0};
    auto pts = shell_points(shell, slice.shell_count);
    PositionDensity1D density;
    density.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = slice.x_min + slice.spacing * double(i);
      density.samples.emplace_back(
          x, post_measurement_density_3body(x, 0.0, pts));
    }
    out.emplace_back(E_m, width_metric(density));
  }
  return out;
}

}  // namespace lke
