#include "lke/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "lke/parallel.hpp"

namespace lke {
namespace {

double residual_wavenumber(double E, double kinetic) {
  return std::sqrt(std::max(E - kinetic, 0.0));
}

// Index of the coordinate 0 on the axis, or npos if 0 is not a sample.
std::size_t zero_index(const Axis& axis) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  if (axis.min > 0 || axis.max < 0) return npos;
  const double f = -axis.min / axis.spacing;
  const double r = std::llround(f);
  if (std::abs(f - r) > 1e-9) return npos;
  return static_cast<std::size_t>(r);
}

}  // namespace

void KernelParams::require_two_body() const {
  if (!(k0 > 0)) throw InvalidParams("KernelParams: k0 must be > 0");
  if (E < k0 * k0) throw InvalidParams("KernelParams: need E >= k0^2");
}

void KernelParams::require_three_body() const {
  if (!(k0 > 0)) throw InvalidParams("KernelParams: k0 must be > 0");
  if (E < 3 * k0 * k0) throw InvalidParams("KernelParams: need E >= 3 k0^2");
}

double psi(double x, double y, const KernelParams& p, const Tolerance& tol) {
  p.require_two_body();
  // The integrand is even in k; fold onto [0, k0].
  auto integrand = [&](double k) {
    return std::cos(x * k) * std::cos(y * residual_wavenumber(p.E, k * k));
  };
  return 2.0 * integrate_1d(integrand, 0.0, p.k0, tol).value;
}

Grid2D psi_grid(const KernelParams& p, const Axis& x_axis, const Axis& y_axis,
                const Tolerance& tol, unsigned threads) {
  p.require_two_body();
  Grid2D grid{x_axis, y_axis, {}};
  const std::size_t nx = x_axis.count();
  const std::size_t ny = y_axis.count();
  grid.values.assign(nx * ny, 0.0);

  // A point is a master when no mirror with smaller coordinates exists on
  // the grid; everything else is filled by index reflection afterwards.
  const std::size_t zx = zero_index(x_axis);
  const std::size_t zy = zero_index(y_axis);
  auto master_of = [](std::size_t i, std::size_t z, std::size_t n) {
    if (z == static_cast<std::size_t>(-1) || i >= z) return i;
    const std::size_t mirror = 2 * z - i;
    return mirror < n ? mirror : i;
  };

  std::vector<std::pair<std::size_t, std::size_t>> masters;
  masters.reserve(nx * ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      if (master_of(ix, zx, nx) == ix && master_of(iy, zy, ny) == iy) {
        masters.emplace_back(ix, iy);
      }
    }
  }
  parallel_for(masters.size(), threads, [&](std::size_t m) {
    auto [ix, iy] = masters[m];
    grid.at(ix, iy) = psi(x_axis.at(ix), y_axis.at(iy), p, tol);
  });
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const std::size_t mx = master_of(ix, zx, nx);
      const std::size_t my = master_of(iy, zy, ny);
      if (mx != ix || my != iy) grid.at(ix, iy) = grid.at(mx, my);
    }
  }
  return grid;
}

std::vector<std::pair<double, double>> trace_out_y(const KernelParams& p,
                                                   const Axis& x_axis,
                                                   const Axis& y_axis,
                                                   const Tolerance& tol,
                                                   unsigned threads) {
  Grid2D grid = psi_grid(p, x_axis, y_axis, tol, threads);
  const std::size_t nx = x_axis.count();
  const std::size_t ny = y_axis.count();

  double peak_sq = 0.0;
  double boundary_sq = 0.0;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double sq = grid.at(ix, iy) * grid.at(ix, iy);
      peak_sq = std::max(peak_sq, sq);
      if (iy == 0 || iy + 1 == ny) boundary_sq = std::max(boundary_sq, sq);
    }
  }
  if (boundary_sq > 0.5 * peak_sq) {
    std::fprintf(stderr,
                 "trace_out_y: warning: y range looks too narrow "
                 "(boundary |psi|^2 = %.3g of peak)\n",
                 boundary_sq / peak_sq);
  }

  std::vector<std::pair<double, double>> d(nx);
  std::vector<double> row(ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      row[iy] = grid.at(ix, iy) * grid.at(ix, iy);
    }
    d[ix] = {x_axis.at(ix), integrate_grid(row, y_axis.spacing)};
  }
  return d;
}

double psi3(double xx1, double xx2, double y, const KernelParams& p,
            const Tolerance& tol) {
  p.require_three_body();
  // Even under joint negation of (k1,k2); fold onto k1 >= 0.
  auto integrand = [&](double k1, double k2) {
    const double kinetic = 0.5 * (k1 * k1 + k2 * k2 + (k1 + k2) * (k1 + k2));
    return std::cos(k1 * xx1 + k2 * xx2) *
           std::cos(y * residual_wavenumber(p.E, kinetic));
  };
  return 2.0 *
         integrate_2d_product(integrand, 0.0, p.k0, -p.k0, p.k0, tol).value;
}

double quadrant_cancellation_check(double xx1, double xx2, double y,
                                   const KernelParams& p,
                                   const Tolerance& tol) {
  p.require_three_body();
  auto integrand = [&](double k1, double k2) {
    const double kinetic = 0.5 * (k1 * k1 + k2 * k2 + (k1 + k2) * (k1 + k2));
    return std::sin(k1 * xx1 + k2 * xx2) *
           std::cos(y * residual_wavenumber(p.E, kinetic));
  };
  return std::abs(
      integrate_2d_product(integrand, -p.k0, p.k0, -p.k0, p.k0, tol).value);
}

std::vector<TraceOut3Sample> trace_out_y3(const KernelParams& p,
                                          const Axis& xx1_axis,
                                          const Axis& xx2_axis,
                                          const Axis& y_axis,
                                          const Tolerance& tol,
                                          unsigned threads) {
  p.require_three_body();
  const std::size_t n1 = xx1_axis.count();
  const std::size_t n2 = xx2_axis.count();
  const std::size_t ny = y_axis.count();
  const std::size_t zy = zero_index(y_axis);

  // d is invariant under (a,b) -> (b,a) and (a,b) -> (-a,-b); the canonical
  // representative lies in the fundamental domain a >= |b|.
  auto canonical = [](double a, double b) {
    if (std::abs(a) >= std::abs(b)) return a >= 0 ? std::pair{a, b}
                                                  : std::pair{-a, -b};
    return b >= 0 ? std::pair{b, a} : std::pair{-b, -a};
  };

  std::map<std::pair<double, double>, double> fundamental;
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      fundamental[canonical(xx1_axis.at(i1), xx2_axis.at(i2))] = 0.0;
    }
  }
  std::vector<std::pair<double, double>> points;
  points.reserve(fundamental.size());
  for (const auto& [key, unused] : fundamental) points.push_back(key);

  std::vector<double> densities(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const auto [a, b] = points[i];
    std::vector<double> row(ny);
    // psi3 is even in y: evaluate y >= 0 and reflect tabulated values.
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const std::size_t my =
          (zy != static_cast<std::size_t>(-1) && iy < zy && 2 * zy - iy < ny)
              ? 2 * zy - iy
              : iy;
      if (my != iy) continue;
      const double v = psi3(a, b, y_axis.at(iy), p, tol);
      row[iy] = v * v;
    }
    for (std::size_t iy = 0; iy < ny; ++iy) {
      if (zy != static_cast<std::size_t>(-1) && iy < zy && 2 * zy - iy < ny) {
        row[iy] = row[2 * zy - iy];
      }
    }
    densities[i] = integrate_grid(row, y_axis.spacing);
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    fundamental[points[i]] = densities[i];
  }

  std::vector<TraceOut3Sample> out;
  out.reserve(n1 * n2);
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const double a = xx1_axis.at(i1);
      const double b = xx2_axis.at(i2);
      out.push_back({a, b, fundamental.at(canonical(a, b))});
    }
  }
  return out;
}

double ridge_locate(double x, const KernelParams& p, const Axis& y_axis,
                    const Tolerance& tol) {
  double best_y = y_axis.at(0);
  double best = -1.0;
  for (std::size_t iy = 0; iy < y_axis.count(); ++iy) {
    const double v = std::abs(psi(x, y_axis.at(iy), p, tol));
    if (v > best) {
      best = v;
      best_y = y_axis.at(iy);
    }
  }
  return best_y;
}

}  // namespace lke
