#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>

#include "lke/gaussian.hpp"
#include "lke/kernel.hpp"
#include "lke/measurement.hpp"
#include "lke/spin.hpp"
#include "oracle.hpp"

using namespace lke;

namespace {

const KernelParams kTwoBody{1.0, 1.0};
const KernelParams kThreeBody{1.0, 3.0};

unsigned worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 4;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[criterion %02d] %s  %s  (%.2f s)\n", criterion,
              pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
}

SpinState random_spin_state(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  const int n = 1 + int(rng() % 4);
  std::vector<SpinAxis> axes;
  for (int i = 0; i < n; ++i) {
    axes.push_back((rng() % 2) ? SpinAxis::X : SpinAxis::Z);
  }
  std::map<std::string, QSqrt2> amps;
  for (int t = 0; t < 3; ++t) {
    std::string label;
    for (int i = 0; i < n; ++i) label += (rng() % 2) ? '+' : '-';
    QSqrt2 c{Rational{coeff(rng), 2}, Rational{coeff(rng), 2}};
    if (!c.is_zero()) amps[label] = c;
  }
  if (amps.empty()) amps[std::string(n, '+')] = QSqrt2{1};
  return SpinState{axes, amps};
}

}  // namespace

TEST_CASE("criterion_1: y=0 closed-form slice") {
  Stopwatch sw;
  double worst = 0.0;
  for (int xi = -25; xi <= 25; ++xi) {
    if (xi == 0) continue;
    const double x = xi;
    worst = std::max(worst,
                     std::abs(psi(x, 0.0, kTwoBody) - 2.0 * std::sin(x) / x));
  }
  const double origin = std::abs(psi(0.0, 0.0, kTwoBody) - 2.0);
  const bool pass = worst <= 1e-8 && origin <= 1e-10;
  report(1, pass, "max slice err " + std::to_string(worst), sw.seconds());
  CHECK(worst <= 1e-8);
  CHECK(origin <= 1e-10);
}

TEST_CASE("criterion_2: Fourier duality") {
  Stopwatch sw;
  double worst = 0.0;
  for (double sigma_k : {0.5, 1.0, 2.0}) {
    for (double x12 : {0.0, 3.0}) {
      GaussianPairParams p{sigma_k, x12};
      std::vector<double> xs;
      for (int i = -5; i <= 5; ++i) {
        xs.push_back(-x12 + double(i) * p.sigma_x() / 2.0);
      }
      worst = std::max(worst, fourier_duality_check(p, xs));
    }
  }
  report(2, worst <= 1e-6, "max duality err " + std::to_string(worst),
         sw.seconds());
  CHECK(worst <= 1e-6);
}

TEST_CASE("criterion_3: centre-of-mass counterexample moments") {
  Stopwatch sw;
  MomentumCovariance mc = lkl_cm_momentum_covariance();
  // oracle: inverting the precision matrix [[1,1],[1,2]] by hand
  const double cov_err = std::max(
      {std::abs(mc.cov[0][0] - 2.0), std::abs(mc.cov[0][1] + 1.0),
       std::abs(mc.cov[1][0] + 1.0), std::abs(mc.cov[1][1] - 1.0)});
  const double corr_err = std::abs(mc.corr + 1.0 / std::numbers::sqrt2);
  const bool pass = cov_err <= 1e-6 && corr_err <= 1e-6;
  report(3, pass, "cov err " + std::to_string(cov_err), sw.seconds());
  CHECK(cov_err <= 1e-6);
  CHECK(corr_err <= 1e-6);
}

TEST_CASE("criterion_4: exact spin algebra") {
  Stopwatch sw;
  const SpinState up = SpinState::basis(SpinAxis::Z, '+');
  const SpinState down = SpinState::basis(SpinAxis::Z, '-');

  const SpinState xz_x =
      change_basis_all(tensor(up, down) + tensor(down, up), SpinAxis::X);
  const bool xz_ok =
      xz_x == SpinState{{SpinAxis::X, SpinAxis::X},
                        {{"++", QSqrt2{1}}, {"--", QSqrt2{-1}}}};

  const SpinState xze =
      tensor(tensor(up, down), down) + tensor(tensor(down, up), up);
  const QSqrt2 c = QSqrt2::inv_sqrt2();
  const bool xze_ok =
      change_basis_all(xze, SpinAxis::X) ==
      SpinState{{SpinAxis::X, SpinAxis::X, SpinAxis::X},
                {{"+++", c}, {"--+", -c}, {"+--", c}, {"-+-", -c}}};

  const SpinState m_x =
      change_basis_all(project(xze, 2, '-'), SpinAxis::X);
  auto marg = outcome_probabilities(m_x, {0, 1});
  bool marginal_ok = marg.size() == 4;
  for (const auto& [key, prob] : marg) {
    if (prob != Rational{1, 4}) marginal_ok = false;
  }

  std::mt19937 rng(41);
  bool involution = true;
  for (int i = 0; i < 100; ++i) {
    SpinState s = random_spin_state(rng);
    SpinState t = s;
    for (std::size_t site = 0; site < s.n_sites(); ++site) {
      t = change_basis(t, site,
                       s.axis(site) == SpinAxis::Z ? SpinAxis::X : SpinAxis::Z);
    }
    for (std::size_t site = 0; site < s.n_sites(); ++site) {
      t = change_basis(t, site, s.axis(site));
    }
    if (!(t == s)) involution = false;
  }

  const bool pass = xz_ok && xze_ok && marginal_ok && involution;
  report(4, pass, "exact expansions and involution", sw.seconds());
  CHECK(xz_ok);
  CHECK(xze_ok);
  CHECK(marginal_ok);
  CHECK(involution);
}

TEST_CASE("criterion_5: quadrant cancellation") {
  Stopwatch sw;
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> unif(-12.0, 12.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    worst = std::max(worst,
                     quadrant_cancellation_check(unif(rng), unif(rng),
                                                 unif(rng), kThreeBody));
  }
  report(5, worst <= 1e-8, "max sine-part residual " + std::to_string(worst),
         sw.seconds());
  CHECK(worst <= 1e-8);
}

TEST_CASE("criterion_6: oracle equivalence") {
  Stopwatch sw;
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> unif(-25.0, 25.0);
  double worst2 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = unif(rng), y = unif(rng);
    worst2 = std::max(worst2, std::abs(psi(x, y, kTwoBody) -
                                       testing::psi_oracle(x, y, kTwoBody)));
  }
  std::uniform_real_distribution<double> unif3(-15.0, 15.0);
  double worst3 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double a = unif3(rng), b = unif3(rng), y = unif3(rng);
    worst3 = std::max(worst3, std::abs(psi3(a, b, y, kThreeBody) -
                                       testing::psi3_oracle(a, b, y,
                                                            kThreeBody)));
  }
  const bool pass = worst2 <= 1e-6 && worst3 <= 1e-5;
  report(6, pass,
         "psi err " + std::to_string(worst2) + ", psi3 err " +
             std::to_string(worst3),
         sw.seconds());
  CHECK(worst2 <= 1e-6);
  CHECK(worst3 <= 1e-5);
}

TEST_CASE("criterion_7: figure-1 properties and ridge band") {
  Stopwatch sw;
  Grid2D g = psi_grid(kTwoBody, {-25.0, 25.0, 1.0}, {-25.0, 25.0, 1.0}, {},
                      worker_threads());
  bool mirror_exact = true;
  for (std::size_t ix = 0; ix < 51; ++ix) {
    for (std::size_t iy = 0; iy < 51; ++iy) {
      if (g.at(ix, iy) != g.at(50 - ix, iy)) mirror_exact = false;
      if (g.at(ix, iy) != g.at(ix, 50 - iy)) mirror_exact = false;
    }
  }
  double reeval = 0.0;
  for (auto [x, y] :
       {std::pair{3.0, 7.0}, {12.0, 5.0}, {21.0, 14.0}, {8.0, 25.0}}) {
    const double v = psi(x, y, kTwoBody);
    reeval = std::max(reeval, std::abs(v - psi(-x, y, kTwoBody)));
    reeval = std::max(reeval, std::abs(v - psi(x, -y, kTwoBody)));
  }

  std::string detail = "ridge:";
  double worst_ridge = 0.0;
  for (double x : {5.0, 10.0, 15.0, 20.0, 25.0}) {
    const double y_star = ridge_locate(x, kTwoBody, {0.0, 25.0, 0.25});
    worst_ridge = std::max(worst_ridge, std::abs(y_star - x));
    detail += " y*(" + std::to_string(int(x)) + ")=" + std::to_string(y_star);
  }
  const bool pass = mirror_exact && reeval <= 1e-10 && worst_ridge <= 2.0;
  report(7, pass, detail + " max|y*-x|=" + std::to_string(worst_ridge),
         sw.seconds());
  CHECK(mirror_exact);
  CHECK(reeval <= 1e-10);
  CHECK(worst_ridge <= 2.0);
}

TEST_CASE("criterion_8: figure-2 properties") {
  Stopwatch sw;
  auto d = trace_out_y(kTwoBody, {-40.0, 40.0, 0.25}, {-40.0, 40.0, 0.25}, {},
                       worker_threads());
  const std::size_t n = d.size();
  double sym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sym = std::max(sym, std::abs(d[i].second - d[n - 1 - i].second));
  }
  const double d0 = d[n / 2].second;
  bool localised = true;
  std::size_t tail_total = 0, tail_pass = 0;
  const double iso0 = psi(0.0, 0.0, kTwoBody);
  for (const auto& [x, dx] : d) {
    const double ax = std::abs(x);
    if (ax >= 5.0 && dx > d0) localised = false;
    if (ax >= 5.0 && ax <= 25.0) {
      ++tail_total;
      const double iso = psi(x, 0.0, kTwoBody);
      if (dx / d0 >= (iso * iso) / (iso0 * iso0)) ++tail_pass;
    }
  }
  const bool tail_ok =
      tail_total > 0 && double(tail_pass) >= 0.8 * double(tail_total);
  const bool pass = sym <= 1e-9 && localised && tail_ok;
  report(8, pass,
         "sym " + std::to_string(sym) + ", tail " +
             std::to_string(tail_pass) + "/" + std::to_string(tail_total),
         sw.seconds());
  CHECK(sym <= 1e-9);
  CHECK(localised);
  CHECK(tail_ok);
}

TEST_CASE("criterion_9: figure-3 properties (reduced grid)") {
  Stopwatch sw;
  auto d = trace_out_y3(kThreeBody, {0.0, 40.0, 2.0}, {-20.0, 20.0, 2.0},
                        {-40.0, 40.0, 0.5}, {}, worker_threads());
  auto find = [&](double a, double b) -> double {
    for (const auto& s : d) {
      if (s.xx1 == a && s.xx2 == b) return s.density;
    }
    return std::nan("");
  };
  double sym = 0.0;
  for (const auto& s : d) {
    const double swapped = find(s.xx2, s.xx1);
    if (!std::isnan(swapped)) {
      sym = std::max(sym, std::abs(s.density - swapped));
    }
  }
  const double peak = find(0.0, 0.0);
  bool peak_at_origin = true;
  for (const auto& s : d) {
    if (s.density > peak) peak_at_origin = false;
  }
  // spot-check the mirrored construction against direct evaluation
  double mirror_err = 0.0;
  {
    const Axis y_axis{-40.0, 40.0, 0.5};
    for (auto [a, b] : {std::pair{2.0, 6.0}, {4.0, -10.0}}) {
      std::vector<double> row(y_axis.count());
      for (std::size_t iy = 0; iy < y_axis.count(); ++iy) {
        const double v = psi3(a, b, y_axis.at(iy), kThreeBody);
        row[iy] = v * v;
      }
      const double direct = integrate_grid(row, y_axis.spacing);
      mirror_err = std::max(mirror_err, std::abs(direct - find(b, a)));
    }
  }
  const bool pass = sym <= 1e-9 && peak_at_origin && mirror_err <= 1e-9;
  report(9, pass,
         "sym " + std::to_string(sym) + ", spot err " +
             std::to_string(mirror_err),
         sw.seconds());
  CHECK(sym <= 1e-9);
  CHECK(peak_at_origin);
  CHECK(mirror_err <= 1e-9);
}

TEST_CASE("criterion_10: nonlocality") {
  Stopwatch sw;
  // two-body: exactly periodic and nowhere decaying
  const double k_m = 0.8;
  const double period = std::numbers::pi / k_m;
  double periodicity = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double x = double(i) * 0.37;
    periodicity = std::max(
        periodicity, std::abs(post_measurement_density_2body(x, k_m) -
                              post_measurement_density_2body(x + period, k_m)));
  }
  double window_min = 1.0;
  for (int w = 0; w < 40; ++w) {
    double wmax = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double x = (double(w) + double(i) / 64.0) * period;
      wmax = std::max(wmax, post_measurement_density_2body(x, k_m));
    }
    window_min = std::min(window_min, wmax);
  }
  const bool two_body_ok = periodicity <= 1e-12 && window_min >= 1.0 - 1e-6;

  auto curve = broadening_curve({0.3, 1.5, 2.7}, kThreeBody);
  const bool increasing = curve[1].second > curve[0].second &&
                          curve[2].second > curve[1].second;
  const double ratio = curve[2].second / curve[0].second;

  const bool pass = two_body_ok && increasing && ratio >= 2.0;
  report(10, pass,
         "W(0.3)=" + std::to_string(curve[0].second) +
             " W(1.5)=" + std::to_string(curve[1].second) +
             " W(2.7)=" + std::to_string(curve[2].second) +
             " ratio=" + std::to_string(ratio),
         sw.seconds());
  CHECK(two_body_ok);
  CHECK(increasing);
  CHECK(ratio >= 2.0);
}
