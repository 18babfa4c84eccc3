#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lke/measurement.hpp"

using namespace lke;

TEST_CASE("two-body post-measurement density") {
  const double k_m = 0.8;
  CHECK(post_measurement_density_2body(0.0, k_m) == doctest::Approx(1.0));
  CHECK(post_measurement_density_2body(-3.0, k_m, 3.0) ==
        doctest::Approx(1.0));
  CHECK(post_measurement_density_2body(std::numbers::pi / (2.0 * k_m), k_m) ==
        doctest::Approx(0.0).epsilon(1e-12));
  const double period = std::numbers::pi / k_m;
  for (double x : {0.3, 1.7, -4.1}) {
    CHECK(post_measurement_density_2body(x, k_m) ==
          doctest::Approx(post_measurement_density_2body(x + period, k_m))
              .epsilon(1e-12));
  }
}

TEST_CASE("shell_points") {
  // degenerate shell
  auto degenerate = shell_points({3.0, 3.0, 1.0}, 720);
  REQUIRE(degenerate.size() == 1);
  CHECK(degenerate[0].first == 0.0);
  CHECK(degenerate[0].second == 0.0);

  // (1,0) satisfies the constraint for E - E_m = 1 by direct substitution
  const double R = 1.0;
  CHECK(1.0 * 1.0 + 1.0 * 0.0 + 0.0 * 0.0 == doctest::Approx(R));

  // E_m = 0: the shell meets the square only at the corners +-(1,1)
  auto corners = shell_points({3.0, 0.0, 1.0}, 720);
  CHECK(!corners.empty());
  for (const auto& [k1, k2] : corners) {
    CHECK(std::abs(k1 * k1 + k1 * k2 + k2 * k2 - 3.0) <= 1e-12);
  }

  for (double E_m : {0.5, 1.5, 2.7}) {
    auto pts = shell_points({3.0, E_m, 1.0}, 720);
    CHECK(pts.size() >= 8);
    for (const auto& [k1, k2] : pts) {
      CHECK(std::abs(0.5 * (k1 * k1 + k2 * k2 + (k1 + k2) * (k1 + k2)) -
                     (3.0 - E_m)) <= 1e-12);
      CHECK(std::abs(k1) <= 1.0);
      CHECK(std::abs(k2) <= 1.0);
    }
  }

  CHECK_THROWS_AS(shell_points({3.0, 1.0, 1.0}, 4), InvalidParams);
  CHECK_THROWS_AS((EnergyShell{3.0, 4.0, 1.0}), InvalidParams);
}

TEST_CASE("three-body post-measurement density") {
  auto pts = shell_points({3.0, 1.5, 1.0}, 720);
  const double n = double(pts.size());
  CHECK(post_measurement_density_3body(0.0, 0.0, pts) ==
        doctest::Approx(n * n).epsilon(1e-12));
  for (auto [a, b] : {std::pair{3.0, 2.0}, {-1.5, 7.0}}) {
    CHECK(post_measurement_density_3body(a, b, pts) ==
          doctest::Approx(post_measurement_density_3body(-a, -b, pts))
              .epsilon(1e-10));
  }
  // E_m = E: single zero-momentum term, constant density
  auto single = shell_points({3.0, 3.0, 1.0}, 720);
  CHECK(post_measurement_density_3body(5.0, -2.0, single) ==
        doctest::Approx(post_measurement_density_3body(0.0, 0.0, single)));
}

TEST_CASE("width_metric") {
  PositionDensity1D uniform;
  for (int i = -40; i <= 40; ++i) {
    uniform.samples.emplace_back(0.25 * i, 1.0);  // uniform on [-10, 10]
  }
  CHECK(width_metric(uniform) == doctest::Approx(10.0).epsilon(0.05));

  PositionDensity1D spike;
  for (int i = 0; i <= 20; ++i) {
    spike.samples.emplace_back(0.5 * i, i == 7 ? 3.0 : 0.0);
  }
  CHECK(width_metric(spike) == doctest::Approx(0.5));

  PositionDensity1D scaled = uniform;
  for (auto& [x, v] : scaled.samples) v *= 7.0;
  CHECK(width_metric(scaled) == doctest::Approx(width_metric(uniform)));

  PositionDensity1D zero;
  zero.samples.emplace_back(0.0, 0.0);
  CHECK_THROWS_AS(width_metric(zero), ZeroMass);
}

TEST_CASE("broadening_curve") {
  const KernelParams p{1.0, 3.0};
  // frozen regression values (shell count 720, slice +-40 step .25)
  auto curve = broadening_curve({0.3, 1.5, 2.7}, p);
  REQUIRE(curve.size() == 3);
  CHECK(std::abs(curve[0].second - 27.5) <= 0.5);
  CHECK(std::abs(curve[1].second - 6.5) <= 0.5);
  CHECK(std::abs(curve[2].second - 3.5) <= 0.5);

  // near the E_m -> E limit the density flattens and W approaches the
  // slice half-length
  auto flat = broadening_curve({2.999}, p);
  CHECK(flat[0].second >= 20.0);

  // pointwise computation: permuting inputs permutes outputs
  auto permuted = broadening_curve({2.7, 0.3, 1.5}, p);
  CHECK(permuted[0].second == curve[2].second);
  CHECK(permuted[1].second == curve[0].second);
  CHECK(permuted[2].second == curve[1].second);
}
