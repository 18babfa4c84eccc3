#include "lke/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace lke {

GaussianPairParams::GaussianPairParams(double sigma_k_, double x12_)
    : sigma_k(sigma_k_), x12(x12_) {
  if (!(sigma_k > 0)) {
    throw std::invalid_argument("GaussianPairParams: sigma_k must be > 0");
  }
}

NBodyGaussianParams::NBodyGaussianParams(std::size_t n_, double sigma_k_,
                                         std::vector<double> offsets_)
    : n(n_), sigma_k(sigma_k_), offsets(std::move(offsets_)) {
  if (n < 2) throw std::invalid_argument("NBodyGaussianParams: n must be >= 2");
  if (!(sigma_k > 0)) {
    throw std::invalid_argument("NBodyGaussianParams: sigma_k must be > 0");
  }
  if (offsets.size() != n - 1) {
    throw DimensionMismatch("NBodyGaussianParams: need n-1 offsets");
  }
}

std::complex<double> lk_momentum_amplitude(double k,
                                           const GaussianPairParams& p) {
  const double modulus = std::exp(-k * k / (p.sigma_k * p.sigma_k));
  return std::polar(modulus, k * p.x12);
}

double lk_position_amplitude(double x1, double x2,
                             const GaussianPairParams& p) {
  const double sx = p.sigma_x();
  const double u = x1 - x2 + p.x12;
  return 2.0 * std::sqrt(std::numbers::pi) / sx * std::exp(-u * u / (sx * sx));
}

double lkn_position_amplitude(const std::vector<double>& xs,
                              const NBodyGaussianParams& p) {
  if (xs.size() != p.n) {
    throw DimensionMismatch("lkn_position_amplitude: coordinate count != n");
  }
  const double sx = 2.0 / p.sigma_k;
  const double prefactor = 2.0 * std::sqrt(std::numbers::pi) / sx;
  double value = 1.0;
  const double xn = xs.back();
  for (std::size_t j = 0; j + 1 < p.n; ++j) {
    const double u = xs[j] - xn + p.offsets[j];
    value *= prefactor * std::exp(-u * u / (sx * sx));
  }
  return value;
}

double fourier_duality_check(const GaussianPairParams& p,
                             const std::vector<double>& x_samples,
                             const Tolerance& tol) {
  // e^{-k^2/sigma_k^2} < 1e-27 beyond 8 sigma_k; the truncation error is
  // far below the comparison threshold.
  const double cutoff = 8.0 * p.sigma_k;
  double max_err = 0.0;
  for (double x : x_samples) {
    const double u = x + p.x12;  // x stands for x1 - x2
    auto integrand = [&](double k) {
      return std::exp(-k * k / (p.sigma_k * p.sigma_k)) * std::cos(k * u);
    };
    const double numeric = integrate_1d(integrand, -cutoff, cutoff, tol).value;
    const double exact = lk_position_amplitude(x, 0.0, p);
    max_err = std::max(max_err, std::abs(numeric - exact));
  }
  return max_err;
}

MomentumCovariance lkl_cm_momentum_covariance(const Tolerance& tol) {
  // |amplitude|^2 ~ e^{-k2^2/2} e^{-(k1+k2)^2/2}; moments by quadrature.
  auto density = [](double k1, double k2) {
    return std::exp(-0.5 * k2 * k2 - 0.5 * (k1 + k2) * (k1 + k2));
  };
  // Marginal std devs are sqrt(2) and 1; +/-12 covers > 8 sigma.
  const double L = 12.0;
  auto moment = [&](auto&& weight) {
    return integrate_2d_product(
               [&](double k1, double k2) {
                 return weight(k1, k2) * density(k1, k2);
               },
               -L, L, -L, L, tol)
        .value;
  };
  const double mass = moment([](double, double) { return 1.0; });
  const double m1 = moment([](double k1, double) { return k1; }) / mass;
  const double m2 = moment([](double, double k2) { return k2; }) / mass;
  const double c11 =
      moment([&](double k1, double) { return (k1 - m1) * (k1 - m1); }) / mass;
  const double c22 =
      moment([&](double, double k2) { return (k2 - m2) * (k2 - m2); }) / mass;
  const double c12 =
      moment([&](double k1, double k2) { return (k1 - m1) * (k2 - m2); }) /
      mass;
  MomentumCovariance out;
  out.cov = {{{c11, c12}, {c12, c22}}};
  out.corr = c12 / std::sqrt(c11 * c22);
  return out;
}

}  // namespace lke
