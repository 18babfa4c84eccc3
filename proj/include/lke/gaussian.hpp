#pragma once

#include <array>
#include <complex>
#include <vector>

#include "lke/quadrature.hpp"

namespace lke {

// Two-body Gaussian momentum-anticorrelated pair. The position-space width
// is tied to the momentum width by sigma_x = 2 / sigma_k.
struct GaussianPairParams {
  double sigma_k;
  double x12 = 0.0;

  explicit GaussianPairParams(double sigma_k_, double x12_ = 0.0);
  double sigma_x() const { return 2.0 / sigma_k; }
};

struct NBodyGaussianParams {
  std::size_t n;
  double sigma_k;
  std::vector<double> offsets;  // x_{1n} ... x_{n-1,n}

  NBodyGaussianParams(std::size_t n_, double sigma_k_,
                      std::vector<double> offsets_);
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e^{-k^2/sigma_k^2} e^{i k x12}; the modulus carries no x12 dependence.
std::complex<double> lk_momentum_amplitude(double k,
                                           const GaussianPairParams& p);

// (2 sqrt(pi)/sigma_x) e^{-(x1-x2+x12)^2/sigma_x^2}
double lk_position_amplitude(double x1, double x2,
                             const GaussianPairParams& p);

// Product of pairwise Gaussians in the relative coordinates x_j - x_n.
double lkn_position_amplitude(const std::vector<double>& xs,
                              const NBodyGaussianParams& p);

// Evaluates the truncated momentum integral at each sample and returns the
// worst deviation from the closed-form position amplitude.
double fourier_duality_check(const GaussianPairParams& p,
                             const std::vector<double>& x_samples,
                             const Tolerance& tol = {});

struct MomentumCovariance {
  std::array<std::array<double, 2>, 2> cov;
  double corr;
};

// Momentum statistics of the centre-of-mass-localised counterexample,
// computed by numeric moment integration of its squared amplitude.
MomentumCovariance lkl_cm_momentum_covariance(const Tolerance& tol = {});

}  // namespace lke
