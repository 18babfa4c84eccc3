#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lke/csv.hpp"
#include "lke/gaussian.hpp"
#include "lke/kernel.hpp"
#include "lke/measurement.hpp"
#include "lke/spin.hpp"
#include "lke/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
  double k0 = 1.0;
  double E = 1.0;
  double x_min, x_max, y_min, y_max;
  double spacing;
  double y_spacing;
  lke::Tolerance tol;
  std::string out;
  std::string config;
  unsigned threads = 1;
};

// key=value defaults applied to options not given on the command line.
int apply_config(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "config: cannot read %s\n", path.c_str());
    return 1;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "config: %s:%zu: expected key=value\n",
                   path.c_str(), lineno);
      return 1;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (!opt) {
      std::fprintf(stderr, "config: %s:%zu: unknown key '%s'\n", path.c_str(),
                   lineno, key.c_str());
      return 1;
    }
    if (opt->count() > 0) continue;  // flags win
    opt->add_result(value);
    opt->run_callback();
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "key=value defaults; flags win");
  cmd->add_option("--k0", o.k0, "momentum cutoff k0");
  cmd->add_option("--E", o.E, "total energy E");
  cmd->add_option("--x-min", o.x_min);
  cmd->add_option("--x-max", o.x_max);
  cmd->add_option("--y-min", o.y_min);
  cmd->add_option("--y-max", o.y_max);
  cmd->add_option("--spacing", o.spacing, "grid spacing");
  cmd->add_option("--y-spacing", o.y_spacing, "y grid spacing");
  cmd->add_option("--tol-abs", o.tol.abs_tol);
  cmd->add_option("--tol-rel", o.tol.rel_tol);
  cmd->add_option("--out", o.out, "output CSV path");
  cmd->add_option("--threads", o.threads, "worker threads")
      ->envname("LKE_THREADS");
}

int run_spin_demo() {
  using namespace lke;
  const SpinState up = SpinState::basis(SpinAxis::Z, '+');
  const SpinState down = SpinState::basis(SpinAxis::Z, '-');

  const SpinState xz = tensor(up, down) + tensor(down, up);
  std::printf("XZ  (z basis): %s\n", xz.to_string().c_str());
  std::printf("XZ  (x basis): %s\n",
              change_basis_all(xz, SpinAxis::X).to_string().c_str());

  const SpinState xze =
      tensor(tensor(up, down), down) + tensor(tensor(down, up), up);
  const SpinState xze_x = change_basis_all(xze, SpinAxis::X);
  std::printf("XZE (z basis): %s\n", xze.to_string().c_str());
  std::printf("XZE (x basis): %s\n", xze_x.to_string().c_str());
  std::printf("XZE marginal on sites 1,2 in x basis:\n");
  for (const auto& [key, prob] : outcome_probabilities(xze_x, {0, 1})) {
    std::printf("  P(%s) = %lld/%lld\n", key.c_str(), prob.numerator(),
                prob.denominator());
  }

  const SpinState m = project(xze, 2, '-');
  std::printf("M = XZE after measuring site 3 as -z: %s\n",
              m.to_string().c_str());
  const SpinState m_x = change_basis_all(m, SpinAxis::X);
  std::printf("M   (x basis): %s\n", m_x.to_string().c_str());
  std::printf("M marginal on sites 1,2 in x basis:\n");
  for (const auto& [key, prob] : outcome_probabilities(m_x, {0, 1})) {
    std::printf("  P(%s) = %lld/%lld\n", key.c_str(), prob.numerator(),
                prob.denominator());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-momentum eigenstate laboratory"};
  app.require_subcommand(1);

  Options fig1{.E = 1.0, .x_min = -25, .x_max = 25, .y_min = -25,
               .y_max = 25, .spacing = 1.0, .y_spacing = 1.0,
               .out = "fig1.csv"};
  Options fig2{.E = 1.0, .x_min = -40, .x_max = 40, .y_min = -40,
               .y_max = 40, .spacing = 0.25, .y_spacing = 0.25,
               .out = "fig2.csv"};
  Options fig3{.E = 3.0, .x_min = 0, .x_max = 40, .y_min = -40,
               .y_max = 40, .spacing = 1.0, .y_spacing = 0.25,
               .out = "fig3.csv"};
  double fig3_xx2_min = -20.0, fig3_xx2_max = 20.0;
  Options nonlocal{.E = 3.0, .x_min = -40, .x_max = 40, .y_min = 0,
                   .y_max = 0, .spacing = 0.25, .y_spacing = 0.25,
                   .out = "nonlocal.csv"};
  std::vector<double> em_values;
  std::size_t shell_count = 720;
  std::string slices_out;
  unsigned verify_threads = 1;

  CLI::App* c1 = app.add_subcommand("fig1", "psi(x,y) grid as CSV");
  add_common_flags(c1, fig1);
  CLI::App* c2 = app.add_subcommand(
      "fig2", "traced-out position distribution d(x) as CSV");
  add_common_flags(c2, fig2);
  CLI::App* c3 = app.add_subcommand(
      "fig3", "three-body distribution d(xx1,xx2) as CSV");
  add_common_flags(c3, fig3);
  c3->add_option("--xx2-min", fig3_xx2_min);
  c3->add_option("--xx2-max", fig3_xx2_max);
  CLI::App* cv = app.add_subcommand("verify", "run the invariant suite");
  cv->add_option("--threads", verify_threads)->envname("LKE_THREADS");
  CLI::App* cs = app.add_subcommand("spin", "exact spin-state expansions");
  CLI::App* cn = app.add_subcommand(
      "nonlocal", "post-measurement broadening curve as CSV");
  add_common_flags(cn, nonlocal);
  cn->add_option("--em", em_values, "measured residual energies E_m");
  cn->add_option("--shell-count", shell_count, "shell sample count");
  cn->add_option("--slices-out", slices_out,
                 "also write density slices (long CSV)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c1->parsed()) {
      if (!fig1.config.empty() && apply_config(c1, fig1.config)) {
        return kExitUsage;
      }
      lke::KernelParams p{fig1.k0, fig1.E};
      if (fig1.E < fig1.k0 * fig1.k0) {
        std::fprintf(stderr, "fig1: requires E >= k0^2\n");
        return kExitUsage;
      }
      auto grid = lke::psi_grid(p, {fig1.x_min, fig1.x_max, fig1.spacing},
                                {fig1.y_min, fig1.y_max, fig1.y_spacing},
                                fig1.tol, fig1.threads);
      lke::write_file(fig1.out, lke::grid_csv(grid));
    } else if (c2->parsed()) {
      if (!fig2.config.empty() && apply_config(c2, fig2.config)) {
        return kExitUsage;
      }
      lke::KernelParams p{fig2.k0, fig2.E};
      if (fig2.E < fig2.k0 * fig2.k0) {
        std::fprintf(stderr, "fig2: requires E >= k0^2\n");
        return kExitUsage;
      }
      auto d = lke::trace_out_y(p, {fig2.x_min, fig2.x_max, fig2.spacing},
                                {fig2.y_min, fig2.y_max, fig2.y_spacing},
                                fig2.tol, fig2.threads);
      lke::write_file(fig2.out, lke::pairs_csv(d, "x", "d"));
    } else if (c3->parsed()) {
      if (!fig3.config.empty() && apply_config(c3, fig3.config)) {
        return kExitUsage;
      }
      lke::KernelParams p{fig3.k0, fig3.E};
      if (fig3.E < 3 * fig3.k0 * fig3.k0) {
        std::fprintf(stderr, "fig3: requires E >= 3 k0^2\n");
        return kExitUsage;
      }
      auto d = lke::trace_out_y3(
          p, {fig3.x_min, fig3.x_max, fig3.spacing},
          {fig3_xx2_min, fig3_xx2_max, fig3.spacing},
          {fig3.y_min, fig3.y_max, fig3.y_spacing}, fig3.tol, fig3.threads);
      lke::write_file(fig3.out, lke::trace3_csv(d));
    } else if (cv->parsed()) {
      auto results = lke::run_verification(verify_threads);
      bool all_pass = true;
      for (const auto& r : results) {
        std::printf("%-42s %s  %s\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str());
        all_pass = all_pass && r.pass;
      }
      if (!all_pass) {
        std::fprintf(stderr, "verify: at least one invariant failed\n");
        return kExitVerifyFailed;
      }
    } else if (cs->parsed()) {
      return run_spin_demo();
    } else if (cn->parsed()) {
      if (!nonlocal.config.empty() && apply_config(cn, nonlocal.config)) {
        return kExitUsage;
      }
      lke::KernelParams p{nonlocal.k0, nonlocal.E};
      if (nonlocal.E < 3 * nonlocal.k0 * nonlocal.k0) {
        std::fprintf(stderr, "nonlocal: requires E >= 3 k0^2\n");
        return kExitUsage;
      }
      if (em_values.empty()) {
        for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          em_values.push_back(f * nonlocal.E);
        }
      }
      for (double em : em_values) {
        if (em < 0 || em >= nonlocal.E) {
          std::fprintf(stderr, "nonlocal: E_m values must lie in [0, E)\n");
          return kExitUsage;
        }
      }
      lke::SliceSpec slice{nonlocal.x_min, nonlocal.x_max, nonlocal.spacing,
                           shell_count};
      auto curve = lke::broadening_curve(em_values, p, slice);
      lke::write_file(nonlocal.out, lke::pairs_csv(curve, "E_m", "W"));
      if (!slices_out.empty()) {
        std::string csv = "E_m,x,density\n";
        for (double em : em_values) {
          auto pts = lke::shell_points({p.E, em, p.k0}, shell_count);
          for (double x = slice.x_min; x <= slice.x_max + 1e-12;
               x += slice.spacing) {
            csv += lke::format_value(em) + "," + lke::format_value(x) + "," +
                   lke::format_value(
                       lke::post_measurement_density_3body(x, 0.0, pts)) +
                   "\n";
          }
        }
        lke::write_file(slices_out, csv);
      }
    }
  } catch (const lke::NonConvergence& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const lke::QuadratureError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const lke::IoError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitOk;
}
