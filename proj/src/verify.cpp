#include "lke/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lke/gaussian.hpp"
#include "lke/kernel.hpp"
#include "lke/measurement.hpp"
#include "lke/spin.hpp"

namespace lke {
namespace {

// Fixed-grid midpoint-rule reference, deliberately sharing nothing with the
// adaptive implementation.
double psi_midpoint(double x, double y, const KernelParams& p,
                    std::size_t panels) {
  const double h = 2.0 * p.k0 / double(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double k = -p.k0 + (double(i) + 0.5) * h;
    sum += std::cos(x * k) * std::cos(y * std::sqrt(std::max(p.E - k * k, 0.0)));
  }
  return sum * h;
}

double psi3_midpoint(double xx1, double xx2, double y, const KernelParams& p,
                     std::size_t panels) {
  const double h = 2.0 * p.k0 / double(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double k1 = -p.k0 + (double(i) + 0.5) * h;
    for (std::size_t j = 0; j < panels; ++j) {
      const double k2 = -p.k0 + (double(j) + 0.5) * h;
      const double kin = 0.5 * (k1 * k1 + k2 * k2 + (k1 + k2) * (k1 + k2));
      sum += std::cos(k1 * xx1 + k2 * xx2) *
             std::cos(y * std::sqrt(std::max(p.E - kin, 0.0)));
    }
  }
  return sum * h * h;
}

SpinState random_state(std::mt19937& rng) {
  std::uniform_int_distribution<int> site_count(1, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> axis(0, 1);
  const int n = site_count(rng);
  std::vector<SpinAxis> axes;
  for (int i = 0; i < n; ++i) {
    axes.push_back(axis(rng) ? SpinAxis::X : SpinAxis::Z);
  }
  std::map<std::string, QSqrt2> amps;
  const int terms = 1 + int(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    std::string label;
    for (int i = 0; i < n; ++i) label += (rng() % 2) ? '+' : '-';
    QSqrt2 c{Rational{coeff(rng), 2}, Rational{coeff(rng), 2}};
    if (!c.is_zero()) amps[label] = c;
  }
  if (amps.empty()) amps[std::string(n, '+')] = QSqrt2{1};
  return SpinState{axes, amps};
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }
  void check_le(const std::string& name, double value, double bound) {
    std::ostringstream os;
    os << value << " (bound " << bound << ")";
    check(name, value <= bound, os.str());
  }
};

void verify_numerics(Suite& s) {
  const Tolerance tol;
  auto f = [](double k) { return std::cos(3.0 * k); };
  auto g = [](double k) { return std::exp(k); };
  const double alpha = 2.5, beta = -1.25;
  const double lin =
      integrate_1d([&](double k) { return alpha * f(k) + beta * g(k); }, -1.0,
                   2.0, tol)
          .value -
      (alpha * integrate_1d(f, -1.0, 2.0, tol).value +
       beta * integrate_1d(g, -1.0, 2.0, tol).value);
  s.check_le("numerics.linearity", std::abs(lin), 2 * tol.abs_tol);

  auto even = [](double k) { return std::cos(5.0 * k); };
  auto odd = [](double k) { return std::sin(3.0 * k); };
  const double refl = integrate_1d(even, -2.0, 2.0, tol).value -
                      2.0 * integrate_1d(even, 0.0, 2.0, tol).value;
  s.check_le("numerics.reflection_even", std::abs(refl), 2 * tol.abs_tol);
  s.check_le("numerics.reflection_odd",
             std::abs(integrate_1d(odd, -2.0, 2.0, tol).value), tol.abs_tol);

  const double sep =
      integrate_2d_product(
          [](double k1, double k2) { return std::cos(k1) * std::cos(k2); },
          -1.0, 1.0, -1.0, 1.0, tol)
          .value -
      integrate_1d([](double k) { return std::cos(k); }, -1.0, 1.0, tol).value *
          integrate_1d([](double k) { return std::cos(k); }, -1.0, 1.0, tol)
              .value;
  s.check_le("numerics.2d_separable", std::abs(sep), 4 * tol.abs_tol);
}

void verify_gaussian(Suite& s) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-10.0, 10.0);

  double worst = 0.0;
  for (double sk : {0.3, 0.5, 1.0, 2.0, 7.5}) {
    GaussianPairParams p{sk};
    worst = std::max(worst, std::abs(p.sigma_x() * p.sigma_k - 2.0));
  }
  s.check_le("gaussian.sigma_duality", worst, 1e-15);

  GaussianPairParams p{1.0, 2.0};
  worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x1 = unif(rng), x2 = unif(rng), shift = unif(rng);
    worst = std::max(worst,
                     std::abs(lk_position_amplitude(x1 + shift, x2 + shift, p) -
                              lk_position_amplitude(x1, x2, p)));
  }
  s.check_le("gaussian.relative_coordinate_only", worst, 1e-12);

  NBodyGaussianParams p3{3, 1.0, {1.5, -0.5}};
  worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> xs{unif(rng), unif(rng), unif(rng)};
    const double base = lkn_position_amplitude(xs, p3);
    const double shift = unif(rng);
    for (auto& x : xs) x += shift;
    worst = std::max(worst, std::abs(lkn_position_amplitude(xs, p3) - base));
  }
  s.check_le("gaussian.lkn_translation_invariance", worst, 1e-12);

  // Conditional slice through the three-body density: the log-density is a
  // parabola with curvature -4/sigma_x^2.
  {
    const double sx = p3.offsets.size() ? 2.0 / p3.sigma_k : 0.0;
    const double h = 0.05;
    const double x3 = 0.4, x2 = x3 - p3.offsets[1];
    auto logd = [&](double x1) {
      const double a = lkn_position_amplitude({x1, x2, x3}, p3);
      return std::log(a * a);
    };
    const double center = x3 - p3.offsets[0];
    const double curvature =
        (logd(center + h) - 2.0 * logd(center) + logd(center - h)) / (h * h);
    s.check_le("gaussian.conditional_localisation",
               std::abs(curvature - (-4.0 / (sx * sx))), 1e-9);
  }

  MomentumCovariance mc = lkl_cm_momentum_covariance();
  double cov_err = std::max(
      {std::abs(mc.cov[0][0] - 2.0), std::abs(mc.cov[0][1] + 1.0),
       std::abs(mc.cov[1][0] + 1.0), std::abs(mc.cov[1][1] - 1.0)});
  s.check_le("gaussian.lkl_cm_covariance", cov_err, 1e-6);
  s.check_le("gaussian.lkl_cm_correlation",
             std::abs(mc.corr + 1.0 / std::numbers::sqrt2), 1e-6);
  s.check("gaussian.lkl_cm_not_eigenstate", mc.corr > -1.0 && mc.corr < 0.0,
          "corr = " + std::to_string(mc.corr));
}

void verify_kernel(Suite& s, unsigned threads) {
  const KernelParams p{1.0, 1.0};
  const Tolerance tol;

  double worst = 0.0;
  for (auto [x, y] : {std::pair{3.0, 7.0}, {5.0, 2.0}, {12.0, 9.0},
                      {0.5, 17.0}, {21.0, 4.0}}) {
    const double v = psi(x, y, p, tol);
    worst = std::max(worst, std::abs(v - psi(-x, y, p, tol)));
    worst = std::max(worst, std::abs(v - psi(x, -y, p, tol)));
  }
  s.check_le("kernel.evenness", worst, 1e-10);

  worst = 0.0;
  for (int xi = -25; xi <= 25; ++xi) {
    if (xi == 0) continue;
    const double x = xi;
    worst = std::max(worst,
                     std::abs(psi(x, 0.0, p, tol) - 2.0 * std::sin(x) / x));
  }
  s.check_le("kernel.y0_closed_form", worst, 1e-8);
  s.check_le("kernel.y0_limit", std::abs(psi(0.0, 0.0, p, tol) - 2.0), 1e-10);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(-25.0, 25.0);
  worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = unif(rng), y = unif(rng);
    worst = std::max(worst,
                     std::abs(psi(x, y, p, tol) - psi_midpoint(x, y, p, 100000)));
  }
  s.check_le("kernel.oracle_psi", worst, 1e-6);

  const KernelParams p3{1.0, 3.0};
  std::uniform_real_distribution<double> unif3(-15.0, 15.0);
  worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double a = unif3(rng), b = unif3(rng), y = unif3(rng);
    worst = std::max(
        worst, std::abs(psi3(a, b, y, p3, tol) - psi3_midpoint(a, b, y, p3, 2000)));
  }
  s.check_le("kernel.oracle_psi3", worst, 1e-5);

  worst = 0.0;
  std::uniform_real_distribution<double> unifq(-12.0, 12.0);
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, quadrant_cancellation_check(
                                unifq(rng), unifq(rng), unifq(rng), p3, tol));
  }
  s.check_le("kernel.quadrant_cancellation", worst, 1e-8);

  const Axis x_axis{-40.0, 40.0, 0.25};
  const Axis y_axis{-40.0, 40.0, 0.25};
  auto d = trace_out_y(p, x_axis, y_axis, tol, threads);
  const std::size_t zero = x_axis.count() / 2;
  const double d0 = d[zero].second;
  bool localised = true;
  double sym = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sym = std::max(sym,
                   std::abs(d[i].second - d[d.size() - 1 - i].second));
    if (std::abs(d[i].first) >= 5.0 && d[i].second > d0) localised = false;
  }
  s.check_le("kernel.trace_out_symmetry", sym, 1e-9);
  s.check("kernel.localisation", localised, "d(0) dominates |x| >= 5");

  std::size_t tail_total = 0, tail_pass = 0;
  for (const auto& [x, dx] : d) {
    const double ax = std::abs(x);
    if (ax < 5.0 || ax > 25.0) continue;
    ++tail_total;
    const double iso = psi(x, 0.0, p, tol);
    const double iso0 = psi(0.0, 0.0, p, tol);
    if (dx / d0 >= (iso * iso) / (iso0 * iso0)) ++tail_pass;
  }
  std::ostringstream os;
  os << tail_pass << "/" << tail_total << " tail points";
  s.check("kernel.broadened_localisation",
          tail_total > 0 &&
              double(tail_pass) >= 0.8 * double(tail_total),
          os.str());
}

void verify_spin(Suite& s) {
  std::mt19937 rng(23);
  bool involution = true;
  bool norms = true;
  for (int i = 0; i < 100; ++i) {
    SpinState state = random_state(rng);
    SpinState flipped = state;
    for (std::size_t site = 0; site < state.n_sites(); ++site) {
      const SpinAxis other = state.axis(site) == SpinAxis::Z ? SpinAxis::X
                                                             : SpinAxis::Z;
      flipped = change_basis(flipped, site, other);
    }
    if (!(flipped.norm_sq() == state.norm_sq())) norms = false;
    for (std::size_t site = 0; site < state.n_sites(); ++site) {
      flipped = change_basis(flipped, site, state.axis(site));
    }
    if (!(flipped == state)) involution = false;
  }
  s.check("spin.basis_change_involution", involution, "100 random states");
  s.check("spin.norm_preservation", norms, "100 random states");

  const SpinState up = SpinState::basis(SpinAxis::Z, '+');
  const SpinState down = SpinState::basis(SpinAxis::Z, '-');
  const SpinState xz = tensor(up, down) + tensor(down, up);
  const SpinState xz_x = change_basis_all(xz, SpinAxis::X);
  const SpinState expected_xz =
      SpinState{{SpinAxis::X, SpinAxis::X},
                {{"++", QSqrt2{1}}, {"--", QSqrt2{-1}}}};
  s.check("spin.xz_expansion", xz_x == expected_xz, xz_x.to_string());

  const SpinState xze =
      tensor(tensor(up, down), down) + tensor(tensor(down, up), up);
  const SpinState xze_x = change_basis_all(xze, SpinAxis::X);
  const QSqrt2 c = QSqrt2::inv_sqrt2();
  const SpinState expected_xze =
      SpinState{{SpinAxis::X, SpinAxis::X, SpinAxis::X},
                {{"+++", c}, {"--+", -c}, {"+--", c}, {"-+-", -c}}};
  s.check("spin.xze_expansion", xze_x == expected_xze, xze_x.to_string());

  auto marg = outcome_probabilities(xze_x, {0, 1});
  bool quarter = marg.size() == 4;
  for (const auto& [key, prob] : marg) {
    if (prob != Rational{1, 4}) quarter = false;
  }
  s.check("spin.xze_sites12_uncorrelated", quarter, "marginal on sites 1,2");

  // No product-form state (3.4) matches the x expansion of XZE over a grid
  // of exact coefficients (evidence for the impossibility claim, not proof).
  bool distinct = true;
  std::vector<Rational> grid;
  for (int num = -4; num <= 4; ++num) grid.emplace_back(num, 2);
  const SpinState rr = tensor(SpinState::basis(SpinAxis::X, '+'),
                              SpinState::basis(SpinAxis::X, '+'));
  const SpinState ll = tensor(SpinState::basis(SpinAxis::X, '-'),
                              SpinState::basis(SpinAxis::X, '-'));
  for (const Rational& sa : grid) {
    for (const Rational& sb : grid) {
      for (const Rational& ta : grid) {
        for (const Rational& tb : grid) {
          const SpinState third_s =
              SpinState{{SpinAxis::X},
                        {{"+", QSqrt2{sa}}, {"-", QSqrt2{sb}}}};
          const SpinState third_t =
              SpinState{{SpinAxis::X},
                        {{"+", QSqrt2{ta}}, {"-", QSqrt2{tb}}}};
          if (tensor(rr, third_s) - tensor(ll, third_t) == xze_x) {
            distinct = false;
          }
        }
      }
    }
  }
  s.check("spin.no_product_form", distinct, "9^4 coefficient grid");

  const SpinState m = project(xze, 2, '-');
  const SpinState expected_m = tensor(tensor(up, down), down);
  s.check("spin.projection", m == expected_m, m.to_string());
  auto m_marg = outcome_probabilities(change_basis_all(m, SpinAxis::X), {0, 1});
  bool m_quarter = m_marg.size() == 4;
  for (const auto& [key, prob] : m_marg) {
    if (prob != Rational{1, 4}) m_quarter = false;
  }
  s.check("spin.measured_state_statistics", m_quarter,
          "all four outcomes at 1/4");
}

void verify_measurement(Suite& s, unsigned threads) {
  const KernelParams p3{1.0, 3.0};

  double residual = 0.0;
  for (double E_m : {0.0, 0.3, 1.5, 2.7}) {
    for (const auto& [k1, k2] : shell_points({3.0, E_m, 1.0}, 720)) {
      residual = std::max(
          residual,
          std::abs(0.5 * (k1 * k1 + k2 * k2 + (k1 + k2) * (k1 + k2)) -
                   (3.0 - E_m)));
    }
  }
  s.check_le("measurement.shell_residual", residual, 1e-12);

  // Two-body delocalisation: every window of one period attains the global
  // maximum.
  {
    const double k_m = 0.7;
    const double period = std::numbers::pi / k_m;
    const double h = period / 256.0;
    double global_max = 0.0;
    std::vector<double> vals;
    for (int i = 0; i < 256 * 20; ++i) {
      vals.push_back(post_measurement_density_2body(double(i) * h, k_m));
      global_max = std::max(global_max, vals.back());
    }
    double worst_window = global_max;
    for (std::size_t start = 0; start + 256 <= vals.size(); start += 256) {
      double wmax = 0.0;
      for (std::size_t i = start; i < start + 256; ++i) {
        wmax = std::max(wmax, vals[i]);
      }
      worst_window = std::min(worst_window, wmax);
    }
    s.check_le("measurement.two_body_no_decay", global_max - worst_window,
               1e-9);
    double perr = 0.0;
    for (int i = 0; i < 512; ++i) {
      const double x = double(i) * 0.13;
      perr = std::max(perr,
                      std::abs(post_measurement_density_2body(x, k_m) -
                               post_measurement_density_2body(x + period, k_m)));
    }
    s.check_le("measurement.two_body_periodicity", perr, 1e-12);
  }

  {
    std::vector<double> ems;
    for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) ems.push_back(f * p3.E);
    auto curve = broadening_curve(ems, p3);
    bool nondecreasing = true;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (curve[i].second < curve[i - 1].second) nondecreasing = false;
    }
    std::ostringstream os;
    for (const auto& [em, w] : curve) os << "W(" << em << ")=" << w << " ";
    s.check("measurement.monotone_broadening",
            nondecreasing && curve.back().second > curve.front().second,
            os.str());
  }

  {
    const KernelParams p2{1.0, 1.0};
    auto d = trace_out_y(p2, {-40.0, 40.0, 0.25}, {-40.0, 40.0, 0.25}, {},
                         threads);
    PositionDensity1D density;
    density.samples = d;
    const double w = width_metric(density);
    std::ostringstream os;
    os << "pre-measurement W = " << w;
    s.check("measurement.pre_post_contrast", w < 40.0, os.str());
  }
}

}  // namespace

std::vector<CheckResult> run_verification(unsigned threads) {
  Suite s;
  verify_numerics(s);
  verify_gaussian(s);
  verify_kernel(s, threads);
  verify_spin(s);
  verify_measurement(s, threads);
  return s.results;
}

}  // namespace lke
