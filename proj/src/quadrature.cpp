#include "lke/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace lke {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const Integrand1D& f, double a, double b,
                     std::size_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    double fsum;
    if (i == 7) {
      fsum = f(center);
      evaluations += 1;
    } else {
      fsum = f(center - dx) + f(center + dx);
      evaluations += 2;
    }
    if (!std::isfinite(fsum)) {
      throw NonFinite("integrand returned a non-finite value");
    }
    kronrod += kKronrodWeights[i] * fsum;
    // odd-index Kronrod nodes (midpoint included) are the 7 Gauss nodes
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * fsum;
    }
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_1d(const Integrand1D& f, double a, double b,
                              const Tolerance& tol) {
  if (!(a < b)) throw QuadratureError("integrate_1d: requires a < b");
  std::size_t evaluations = 0;
  std::priority_queue<Panel> queue;
  Panel root = evaluate_panel(f, a, b, evaluations);
  double total = root.value;
  double total_err = root.error;
  queue.push(root);
  std::size_t subdivisions = 0;
  while (total_err > std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
    if (subdivisions >= tol.max_subdivisions) {
      throw NonConvergence("integrate_1d: subdivision limit reached");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, evaluations);
    Panel right = evaluate_panel(f, mid, worst.b, evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }
  return QuadratureResult{total, total_err, evaluations};
}

QuadratureResult integrate_2d_product(const Integrand2D& f, double ax,
                                      double bx, double ay, double by,
                                      const Tolerance& tol) {
  if (!(ax < bx) || !(ay < by)) {
    throw QuadratureError("integrate_2d_product: requires ax < bx, ay < by");
  }
  // The inner integral is resolved tighter so its noise does not masquerade
  // as outer-integrand structure.
  Tolerance inner = tol;
  inner.abs_tol = tol.abs_tol * 0.1;
  inner.rel_tol = tol.rel_tol * 0.1;
  std::size_t inner_evaluations = 0;
  auto outer = [&](double x) {
    QuadratureResult r = integrate_1d([&](double y) { return f(x, y); }, ay,
                                      by, inner);
    inner_evaluations += r.evaluations;
    return r.value;
  };
  QuadratureResult result = integrate_1d(outer, ax, bx, tol);
  result.evaluations = inner_evaluations;
  return result;
}

double integrate_grid(const std::vector<double>& samples, double spacing) {
  if (samples.size() < 3) {
    throw TooFewSamples("integrate_grid: need at least 3 samples");
  }
  if (!(spacing > 0)) {
    throw QuadratureError("integrate_grid: spacing must be positive");
  }
  std::size_t n = samples.size();
  // Simpson needs an odd sample count; close an even count with one
  // trapezoid panel at the far end.
  std::size_t simpson_end = (n % 2 == 1) ? n : n - 1;
  double sum = samples[0] + samples[simpson_end - 1];
  for (std::size_t i = 1; i + 1 < simpson_end; ++i) {
    sum += samples[i] * ((i % 2 == 1) ? 4.0 : 2.0);
  }
  double integral = sum * spacing / 3.0;
  if (simpson_end != n) {
    integral += 0.5 * spacing * (samples[n - 2] + samples[n - 1]);
  }
  return integral;
}

}  // namespace lke
