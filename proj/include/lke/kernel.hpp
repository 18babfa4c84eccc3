#pragma once

#include <utility>
#include <vector>

#include "lke/grid.hpp"
#include "lke/quadrature.hpp"

namespace lke {

struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Momentum cutoff and total energy for the energy-momentum eigenstate
// kernels. Two-body use requires E >= k0^2, three-body E >= 3 k0^2.
struct KernelParams {
  double k0;
  double E;

  void require_two_body() const;
  void require_three_body() const;
};

// Psi(x,y) = int_{-k0}^{k0} cos(x k) cos(y sqrt(E - k^2)) dk.
// x and y are the reduced coordinates x1-x2+x12 and y3-y4.
double psi(double x, double y, const KernelParams& p, const Tolerance& tol = {});

// Full-grid sweep of psi; evaluates one quadrant and mirrors (the kernel is
// even in both arguments).
Grid2D psi_grid(const KernelParams& p, const Axis& x_axis, const Axis& y_axis,
                const Tolerance& tol = {}, unsigned threads = 1);

// Unnormalised position distribution d(x) = int psi(x,y)^2 dy over the
// tabulated y grid.
std::vector<std::pair<double, double>> trace_out_y(const KernelParams& p,
                                                   const Axis& x_axis,
                                                   const Axis& y_axis,
                                                   const Tolerance& tol = {},
                                                   unsigned threads = 1);

// Three-body kernel over the square [-k0,k0]^2 with residual energy
// E - (k1^2 + k2^2 + (k1+k2)^2)/2. The sine part vanishes by quadrant
// cancellation and is not evaluated.
double psi3(double xx1, double xx2, double y, const KernelParams& p,
            const Tolerance& tol = {});

// Integrates the sine (imaginary) part over the full square; the result is
// an exact zero up to quadrature noise.
double quadrant_cancellation_check(double xx1, double xx2, double y,
                                   const KernelParams& p,
                                   const Tolerance& tol = {});

struct TraceOut3Sample {
  double xx1;
  double xx2;
  double density;
};

// d(xx1,xx2) = int psi3^2 dy, computed on the fundamental domain
// xx1 >= |xx2| and mirrored across xx1 = |xx2|.
std::vector<TraceOut3Sample> trace_out_y3(const KernelParams& p,
                                          const Axis& xx1_axis,
                                          const Axis& xx2_axis,
                                          const Axis& y_axis,
                                          const Tolerance& tol = {},
                                          unsigned threads = 1);

// argmax over the sampled y axis of |psi(x,y)|.
double ridge_locate(double x, const KernelParams& p, const Axis& y_axis,
                    const Tolerance& tol = {});

}  // namespace lke
