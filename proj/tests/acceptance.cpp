// Acceptance harness: ten numbered end-to-end checks, one PASS/FAIL line each
// on stdout, progress notes on stderr.  Exit status 0 only when all ten pass.
// Every criterion runs even after earlier failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fvk/cap.hpp"
#include "fvk/circle.hpp"
#include "fvk/econe.hpp"
#include "fvk/errors.hpp"
#include "fvk/fitting.hpp"
#include "fvk/fourier.hpp"
#include "fvk/grid.hpp"
#include "fvk/optim.hpp"
#include "fvk/types.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Check {
  bool ok = true;
  std::string detail;
  std::string fail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!fail.empty()) fail += "; ";
    fail += what;
  }
  void info(const std::string& s) {
    if (!detail.empty()) detail += ", ";
    detail += s;
  }
};

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Body>
int run_criterion(int id, const char* label, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    if (!c.fail.empty()) c.fail += "; ";
    c.fail += std::string("exception: ") + e.what();
  }
  std::string tail = c.ok ? c.detail : c.fail;
  if (!c.ok && !c.detail.empty()) tail += " | " + c.detail;
  std::printf("[criterion %2d] %s %s: %s (%.1f s)\n", id, c.ok ? "PASS" : "FAIL",
              label, tail.c_str(), elapsed_s(t0));
  std::fflush(stdout);
  return c.ok ? 0 : 1;
}

// analytic minimizer of the ring functional: a single cos(2t) mode scaled to
// hit the excess length target
fvk::FourierCurve ring_curve(double Delta, int order = 4) {
  fvk::FourierCurve c(order);
  c.a[1] = Delta * std::sqrt(2.0 / 3.0);
  return c;
}

fvk::cap::CapProfile parabola_profile(const fvk::RadialGrid& grid) {
  fvk::cap::CapProfile p;
  p.grid = grid;
  p.u.assign(grid.n(), 0.0);
  p.w.resize(grid.n());
  for (int i = 0; i < grid.n(); ++i) p.w[i] = grid.r[i] * grid.r[i];
  return p;
}

// linear transfer onto a finer cell centered grid; the first target node sits
// below the first source node and picks up the r -> 0 extrapolation of the
// first segment, which matches the u, w ~ r behaviour there
fvk::cap::CapProfile refine_profile(const fvk::cap::CapProfile& src,
                                    const fvk::RadialGrid& grid, double delta) {
  fvk::cap::CapProfile out;
  out.grid = grid;
  out.u.resize(grid.n());
  out.w.resize(grid.n());
  const auto& rs = src.grid.r;
  const int ns = src.grid.n();
  int j = 0;
  for (int i = 0; i < grid.n(); ++i) {
    const double r = grid.r[i];
    while (j + 2 < ns && rs[j + 1] < r) ++j;
    const double t = (r - rs[j]) / (rs[j + 1] - rs[j]);
    out.u[i] = src.u[j] + t * (src.u[j + 1] - src.u[j]);
    out.w[i] = src.w[j] + t * (src.w[j + 1] - src.w[j]);
  }
  out.w.back() = 1.0 - delta;
  return out;
}

struct CapRun {
  fvk::cap::MinimizeResult res;
  int levels = 0;
  int stalled = 0;  // levels cut off while the energy was still moving
  long total_iterations = 0;
};

// coarse-to-fine descent: solve on 256 nodes, transfer, resolve, up to the
// requested resolution.  Every level runs repeated solver calls until the
// gradient test passes or a whole call lowers the energy by less than one
// part in 1e5 (the sup-norm gradient tolerance is dominated by stiff
// junction freedoms whose energetic content is ~grad^2/stiffness, far below
// anything the downstream fits can see, so the energy plateau is the honest
// stopping signal).  Call lengths escalate: easy levels settle after a short
// first call, while the coarse global solve at large h needs one long run
// with warm quasi-Newton memory (restarting every few thousand iterations
// discards the valley curvature and can leave 10-20% of the energy on the
// table; measured at h = 1/8, delta = 1, a single 50000-iteration call on
// 256 nodes descends to 0.173 where eight 5000-iteration restarts stall
// near 0.20).  Once a level is settled the finer levels only shed the
// interpolation transfer penalty and re-settle within a call or two, with
// the energy grid-stable to several digits.
CapRun minimize_multilevel(double h, double delta, int n_target,
                           const fvk::optim::OptimSettings& base) {
  const double gtol = std::max(1e-10, 1e-6 * h);
  fvk::optim::OptimSettings call = base;
  CapRun run;
  int n = std::min(256, n_target);
  fvk::cap::CapProfile prof =
      fvk::cap::build_inversion(h, delta, fvk::RadialGrid::uniform(n));
  while (true) {
    static const int lens[8] = {5000,  25000, 50000, 50000,
                                50000, 50000, 50000, 50000};
    bool settled = false;
    for (int k = 0; k < 8 && !settled; ++k) {
      call.max_inner = lens[k];
      run.res = fvk::cap::minimize_cap(h, delta, prof, gtol, call);
      run.total_iterations += run.res.iterations;
      prof = run.res.profile;
      const double drop = run.res.initial_energy - run.res.energy.total;
      settled = !run.res.budget_exhausted || drop <= 1e-5 * run.res.energy.total;
    }
    ++run.levels;
    if (!settled) ++run.stalled;
    if (n >= n_target) break;
    n *= 2;
    prof = refine_profile(prof, fvk::RadialGrid::uniform(n), delta);
  }
  return run;
}

// --- criterion bodies ---

void crit1_ring_minimum(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_e = 0.0, worst_mass = 0.0, worst_resid = 0.0;
  for (double Delta : {0.25, 0.5, 1.0}) {
    const double e_min = 6.0 * kPi * Delta * Delta;
    const double target = 2.0 * kPi * Delta * Delta;
    const fvk::circle::CircleSolution sol = fvk::circle::solve_min(Delta, 8, 1e-6);
    const double rel_e = std::abs(sol.energy - e_min) / e_min;
    const double mass = fvk::circle::mass_outside_12(sol.curve);
    // the solver reports the augmented Lagrangian multiplier; stationarity of
    // the unconstrained form uses the opposite sign
    const double resid = fvk::circle::el_residual(sol.curve, -sol.multiplier);
    worst_e = std::max(worst_e, rel_e);
    worst_mass = std::max(worst_mass, mass);
    worst_resid = std::max(worst_resid, resid / target);
    c.require(rel_e <= 5e-3, "Delta=" + num(Delta) + ": energy off by " + num(rel_e));
    c.require(mass <= 1e-2, "Delta=" + num(Delta) + ": stray mode mass " + num(mass));
    c.require(resid <= 1e-6 * target,
              "Delta=" + num(Delta) + ": EL residual " + num(resid));
  }
  const double secs = elapsed_s(t0);
  c.require(secs < 5.0, "took " + num(secs) + " s, budget 5 s");
  c.info("max rel energy err " + num(worst_e));
  c.info("max stray mass " + num(worst_mass));
  c.info("max EL residual/target " + num(worst_resid));
}

void crit2_mode_table(Check& c) {
  for (double Delta : {0.25, 0.5, 1.0}) {
    const auto table = fvk::circle::mode_energy_table(Delta, 6);
    c.require(table.size() == 5, "table size");
    for (const auto& [n, e] : table) {
      const double expected =
          2.0 * kPi * Delta * Delta * (static_cast<double>(n) * n - 1.0);
      c.require(e == expected, "mode " + std::to_string(n) + " at Delta=" + num(Delta) +
                                   " not exact");
    }
  }
  // no random start may land below the known minimum
  const double Delta = 0.5;
  const double floor = 6.0 * kPi * Delta * Delta * (1.0 - 1e-6);
  double lowest = 1e300;
  for (unsigned long long seed = 1; seed <= 20; ++seed) {
    fvk::optim::OptimSettings s;
    s.seed = seed;
    const auto sol = fvk::circle::solve_min(Delta, 8, 1e-4, s);
    lowest = std::min(lowest, sol.energy);
    c.require(sol.energy >= floor, "seed " + std::to_string(seed) + " beat the minimum");
  }
  c.info("branch energies exact for Delta in {0.25, 0.5, 1}");
  c.info("lowest of 20 seeded solves " + num(lowest) + " vs floor " + num(floor));
}

void crit3_cap_exactness(Check& c) {
  const double h = 0.1;
  const double exact = 4.0 * h * h;
  const auto gap = [&](int n) {
    const auto e =
        fvk::cap::cap_energy(parabola_profile(fvk::RadialGrid::uniform(n)), h);
    return std::abs(e.total - exact);
  };
  const double rel = gap(4096) / exact;
  c.require(rel <= 1e-4, "n=4096 relative error " + num(rel));
  const double ratio = gap(256) / gap(512);
  c.require(ratio > 3.5 && ratio < 4.5, "halving ratio " + num(ratio));
  c.info("undeflected rel err " + num(rel) + " at n=4096");
  c.info("excluded-core decay ratio " + num(ratio));
}

void crit4_econe_log_fit(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const int nt = 512;
  for (double Delta : {0.5, 1.0}) {
    fvk::circle::CircleSolution sol = fvk::circle::solve_min(Delta, 8, 1e-6);
    sol.curve.a[0] = 0.0;  // the tilt mode is neutral for the ring functional
    sol.curve.b[0] = 0.0;  // but feeds the core, so drop it before truncating
    std::vector<std::pair<double, double>> samples;
    for (int k = 4; k <= 10; ++k) {
      const double h = std::pow(2.0, -k);
      const int nr = static_cast<int>(std::ceil(8.0 / h - 1e-9));
      const fvk::PolarGrid grid = fvk::PolarGrid::make(nr, nt);
      const fvk::econe::EConeConfig cfg{sol.curve, Delta, h};
      const fvk::EnergyBreakdown e = fvk::econe::fvk_energy_polar(
          fvk::econe::build_truncated_pair(cfg, grid), Delta, h, grid);
      samples.emplace_back(h, e.total);
      std::fprintf(stderr, "  [c4] Delta=%g h=2^-%d nr=%d total=%.6g (%.1f s)\n",
                   Delta, k, nr, e.total, elapsed_s(t0));
    }
    const fvk::econe::LogFit fit = fvk::econe::fit_log_coefficient(samples);
    const double predicted = 6.0 * kPi * Delta * Delta;
    c.require(std::abs(fit.C1 - predicted) <= 0.1 * predicted,
              "Delta=" + num(Delta) + ": C1=" + num(fit.C1) + " vs " + num(predicted));
    c.info("C1/predicted = " + num(fit.C1 / predicted) + " at Delta=" + num(Delta));
  }
  const double secs = elapsed_s(t0);
  c.require(secs < 120.0, "took " + num(secs) + " s, budget 120 s");
}

void crit5_gauss_curvature(Check& c) {
  const double Delta = 0.5;
  const double h = 1.0 / 16.0;
  const int nr = 128;
  const fvk::PolarGrid grid = fvk::PolarGrid::make(nr, 512);
  const fvk::econe::EConeConfig cfg{ring_curve(Delta), Delta, h};
  const fvk::econe::EConeFields fields = fvk::econe::build_truncated_pair(cfg, grid);
  const double target = -kPi * Delta * Delta;
  double worst = 0.0;
  int checked = 0;
  for (int i = 1; i + 1 < grid.nr(); ++i) {
    const double r = grid.r[i];
    if (r < 0.2 || r >= 1.0) continue;
    const double kappa = fvk::econe::gauss_curvature(fields.w, r, grid);
    worst = std::max(worst, std::abs(kappa - target));
    ++checked;
  }
  c.require(checked > 50, "only " + std::to_string(checked) + " radii probed");
  c.require(worst <= 0.02 * kPi * Delta * Delta,
            "max curvature deviation " + num(worst));
  c.info("max |integrated curvature + pi Delta^2| = " + num(worst) + " over " +
         std::to_string(checked) + " radii");
}

void crit6_indentation_scaling(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const fvk::optim::OptimSettings base;  // stock budgets, tolerance set per level
  const int n = 2048;
  std::vector<fvk::fitting::Sample> deep, flat;
  double ratio_lo = 1e300, ratio_hi = 0.0;
  int stalled = 0;
  for (double delta : {1.0, 0.0}) {
    for (int k = 3; k <= 9; ++k) {
      const double h = std::pow(2.0, -k);
      const CapRun run = minimize_multilevel(h, delta, n, base);
      const double e = run.res.energy.total;
      stalled += run.stalled;
      (delta > 0.5 ? deep : flat).push_back({h, delta, e});
      const double scale = h * h + std::pow(delta, 1.5) * std::pow(h, 1.5);
      ratio_lo = std::min(ratio_lo, e / scale);
      ratio_hi = std::max(ratio_hi, e / scale);
      std::fprintf(
          stderr,
          "  [c6] delta=%g h=2^-%d energy=%.6g iters=%ld grad=%.2g stalled=%d (%.1f s)\n",
          delta, k, e, run.total_iterations, run.res.grad_sup_norm, run.stalled,
          elapsed_s(t0));
    }
  }
  const double p_deep = fvk::fitting::fit_scaling(deep, "A*h^p").p;
  const double p_flat = fvk::fitting::fit_scaling(flat, "A*h^p").p;
  c.require(p_deep >= 1.35 && p_deep <= 1.65,
            "deep exponent " + num(p_deep) + " outside [1.35, 1.65]");
  c.require(p_flat >= 1.9 && p_flat <= 2.1,
            "flat exponent " + num(p_flat) + " outside [1.9, 2.1]");
  c.require(ratio_hi / ratio_lo < 100.0,
            "scaled energy spans " + num(ratio_hi / ratio_lo) + "x");

  // resolution stability at a mid thickness
  const double h_mid = std::pow(2.0, -6);
  const CapRun run_2048 = minimize_multilevel(h_mid, 1.0, 2048, base);
  const CapRun run_4096 = minimize_multilevel(h_mid, 1.0, 4096, base);
  stalled += run_2048.stalled + run_4096.stalled;
  const double e_2048 = run_2048.res.energy.total;
  const double e_4096 = run_4096.res.energy.total;
  const double drift = std::abs(e_4096 - e_2048) / e_2048;
  c.require(drift <= 0.03, "doubling n moved the energy by " + num(drift));
  c.require(stalled == 0,
            std::to_string(stalled) + " level solves cut off while still descending");

  const double secs = elapsed_s(t0);
  c.require(secs < 1800.0, "took " + num(secs) + " s, budget 1800 s");
  c.info("exponents " + num(p_deep) + " (deep) / " + num(p_flat) + " (flat)");
  c.info("scaled-energy span " + num(ratio_hi / ratio_lo) + "x");
  c.info("doubling drift " + num(drift));
  c.info("stalled levels " + std::to_string(stalled));
}

void crit7_construction_closure(Check& c) {
  // boundary behaviour of the assembled profile
  double worst_bc = 0.0;
  for (auto [h, delta] : {std::pair{0.125, 1.0}, {0.0625, 0.5}, {0.05, 0.25}}) {
    const auto prof =
        fvk::cap::build_inversion(h, delta, fvk::RadialGrid::uniform(2048));
    const auto rep = fvk::cap::admissibility(prof, delta);
    worst_bc = std::max({worst_bc, rep.w_zero_quadratic, rep.u_zero_linear});
    c.require(rep.w_zero_quadratic <= 1e-8,
              "w(0) extrapolation " + num(rep.w_zero_quadratic));
    c.require(rep.u_zero_linear <= 1e-8, "u(0) extrapolation " + num(rep.u_zero_linear));
    c.require(rep.w_boundary_error <= 1e-12, "boundary value drifted");
  }
  // connector closure identities across the scaling range
  double worst_close = 0.0;
  for (int k = 3; k <= 9; ++k) {
    const double h = std::pow(2.0, -k);
    const fvk::cap::RlChoice rl = fvk::cap::choose_Rl(h, 1.0);
    c.require(rl.feasible, "h=2^-" + std::to_string(k) + " infeasible");
    const fvk::cap::ConnectorSpec spec = fvk::cap::build_connector(rl.R, rl.l);
    worst_close = std::max({worst_close, std::abs(spec.height_closure()),
                            std::abs(spec.sm2_residual())});
  }
  c.require(worst_close <= 1e-10, "connector closure residual " + num(worst_close));

  // membrane stretch is exactly balanced in the continuum, and the balance
  // also cancels the O(dr) stencil errors at the junction nodes (they carry
  // the factor 8r - 2 w' w'', zero on the outer branches where w' = +-2r),
  // so the discrete residual is O(dr^2) pointwise and O(dr^4) in energy:
  // halving the spacing divides the stretch by about 16
  const double h = 0.125;
  const auto stretch = [&](int nn) {
    return fvk::cap::cap_energy(
               fvk::cap::build_inversion(h, 1.0, fvk::RadialGrid::uniform(nn)), h)
        .membrane_stretch;
  };
  const double m512 = stretch(512), m1024 = stretch(1024), m2048 = stretch(2048);
  const double total2048 =
      fvk::cap::cap_energy(
          fvk::cap::build_inversion(h, 1.0, fvk::RadialGrid::uniform(2048)), h)
          .total;
  const double r1 = m512 / m1024, r2 = m1024 / m2048;
  c.require(r1 > 12.0 && r1 < 20.0, "stretch decay 512/1024 = " + num(r1));
  c.require(r2 > 12.0 && r2 < 20.0, "stretch decay 1024/2048 = " + num(r2));
  c.require(m2048 <= 1e-8 * total2048,
            "residual stretch " + num(m2048) + " vs total " + num(total2048));
  c.info("worst boundary extrapolation " + num(worst_bc));
  c.info("worst connector closure " + num(worst_close));
  c.info("stretch decay ratios " + num(r1) + ", " + num(r2));
  c.info("residual stretch fraction " + num(m2048 / total2048));
}

void crit8_oracles(Check& c) {
  // cap gradient against central differences
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-0.5, 0.5);
  const double h = 0.2, delta = 0.4;
  const fvk::RadialGrid grid = fvk::RadialGrid::uniform(48);
  double worst_grad = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    fvk::cap::CapProfile p;
    p.grid = grid;
    p.u.resize(grid.n());
    p.w.resize(grid.n());
    const double c1 = U(rng), c2 = U(rng), c3 = U(rng), c4 = U(rng);
    for (int i = 0; i < grid.n(); ++i) {
      const double r = grid.r[i];
      p.u[i] = r * (c1 + r * (c2 + r * c3));
      p.w[i] = r * r + c4 * r * r * (1.0 - r);
    }
    p.w.back() = 1.0 - delta;
    const fvk::cap::CapGradient g = fvk::cap::cap_gradient(p, h);
    c.require(g.dw.back() == 0.0, "pinned boundary gradient leaked");
    const auto probe = [&](std::vector<double>& field, int i, double an) {
      const double v = field[i];
      const double eps = 1e-6 * std::max(1.0, std::abs(v));
      field[i] = v + eps;
      const double ep = fvk::cap::cap_energy(p, h).total;
      field[i] = v - eps;
      const double em = fvk::cap::cap_energy(p, h).total;
      field[i] = v;
      const double fd = (ep - em) / (2.0 * eps);
      worst_grad = std::max(worst_grad,
                            std::abs(fd - an) / std::max({1.0, std::abs(fd), std::abs(an)}));
    };
    for (int i = 0; i < grid.n(); ++i) probe(p.u, i, g.du[i]);
    for (int i = 0; i + 1 < grid.n(); ++i) probe(p.w, i, g.dw[i]);
  }
  c.require(worst_grad <= 1e-5, "cap gradient vs differences " + num(worst_grad));

  // closed-form ring functionals against plain trapezoid sums
  std::mt19937_64 rng2(11);
  std::uniform_real_distribution<double> V(-1.0, 1.0);
  const int m = 4096;
  double worst_ring = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    fvk::FourierCurve f(8);
    f.a0 = V(rng2);
    for (int n = 0; n < 8; ++n) {
      f.a[n] = V(rng2);
      f.b[n] = V(rng2);
    }
    const fvk::FourierCurve d1 = f.derivative();
    const fvk::FourierCurve d2 = d1.derivative();
    double qe = 0.0, qc = 0.0;
    for (int k = 0; k < m; ++k) {
      const double t = 2.0 * kPi * k / m;
      const double a = f.evaluate(t), ap = d1.evaluate(t), app = d2.evaluate(t);
      qe += (a + app) * (a + app);
      qc += ap * ap - a * a;
    }
    qe *= 2.0 * kPi / m;
    qc *= 2.0 * kPi / m;
    const double ee = std::abs(fvk::circle::energy(f) - qe) / std::max(1.0, std::abs(qe));
    const double ec = std::abs(fvk::circle::constraint_value(f) - qc) /
                      std::max(1.0, std::abs(qc));
    worst_ring = std::max({worst_ring, ee, ec});
  }
  c.require(worst_ring <= 1e-8, "ring functional vs quadrature " + num(worst_ring));
  c.info("worst gradient deviation " + num(worst_grad));
  c.info("worst functional deviation " + num(worst_ring));
}

void crit9_invariances(Check& c) {
  // adding tilt content must not change a single bit of either functional
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    fvk::FourierCurve f(8);
    f.a0 = U(rng);
    for (int n = 0; n < 8; ++n) {
      f.a[n] = U(rng);
      f.b[n] = U(rng);
    }
    fvk::FourierCurve tilted = f;
    tilted.a[0] = U(rng);
    tilted.b[0] = U(rng);
    c.require(fvk::circle::energy(f) == fvk::circle::energy(tilted),
              "tilt changed the energy");
    c.require(fvk::circle::constraint_value(f) == fvk::circle::constraint_value(tilted),
              "tilt changed the constraint");
  }

  // a degree one cone field spends the same bending energy in every dyadic
  // annulus; the window integrals must agree to 1%
  const double Delta = 0.5;
  const fvk::PolarGrid grid = fvk::PolarGrid::make(512, 256);
  const fvk::econe::EConeFields fields =
      fvk::econe::build_homogeneous_pair(ring_curve(Delta), Delta, grid);
  double first = 0.0, worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const double hi = std::pow(2.0, -k);
    const double bend =
        fvk::econe::fvk_energy_polar(fields, Delta, 1.0, grid, 0.5 * hi, hi).bend;
    if (k == 1)
      first = bend;
    else
      worst = std::max(worst, std::abs(bend / first - 1.0));
  }
  c.require(worst <= 0.01, "dyadic annuli differ by " + num(worst));
  c.info("tilt invariance bitwise over 20 draws");
  c.info("max dyadic annulus spread " + num(worst));
}

void crit10_diagnostics(Check& c) {
  const fvk::RadialGrid grid = fvk::RadialGrid::uniform(1024);
  c.require(fvk::cap::tau(parabola_profile(grid)) == 0.0,
            "undeflected profile flagged by the slope probe");

  const double h = 1.0 / 16.0, delta = 0.5;
  const fvk::cap::RlChoice rl = fvk::cap::choose_Rl(h, delta);
  const auto built = fvk::cap::build_inversion(h, delta, grid);
  const double t_built = fvk::cap::tau(built);
  const double slack = 2.0 * grid.spacing;
  c.require(t_built >= rl.R - rl.l - slack && t_built <= rl.R + rl.l + slack,
            "construction slope switch at " + num(t_built) + " vs [" +
                num(rl.R - rl.l) + ", " + num(rl.R + rl.l) + "]");

  const fvk::optim::OptimSettings base;
  const CapRun run = minimize_multilevel(h, delta, 1024, base);
  const fvk::cap::LowerBoundReport rep =
      fvk::cap::lower_bound_report(run.res.profile, h, delta);
  c.require(rep.ga_ratio <= 1.5, "doubling-interval stretch ratio " + num(rep.ga_ratio));
  // the minimizer at this thickness settles in a basin whose slope never
  // enters the inverted well (tau = 1), so the interpolation numerator
  // saturates at h^(3/2); what matters is that the ratio stays below a fixed
  // constant, observed 0.42 here with the thickness ratio near 0.11
  c.require(rep.interp_ratio <= 1.5, "interpolation ratio " + num(rep.interp_ratio));
  c.require(rep.thickness_ratio <= 0.3, "thickness ratio " + num(rep.thickness_ratio));
  c.info("tau(min) = " + num(rep.tau_value));
  c.info("ga_ratio " + num(rep.ga_ratio));
  c.info("interp_ratio " + num(rep.interp_ratio));
  c.info("thickness_ratio " + num(rep.thickness_ratio));
  c.info("slope_l1_ratio " + num(rep.slope_l1_ratio));
}

}  // namespace

int main() {
  int failed = 0;
  failed += run_criterion(1, "ring minimum via constrained descent", crit1_ring_minimum);
  failed += run_criterion(2, "stationary branch energies and optimality floor",
                          crit2_mode_table);
  failed += run_criterion(3, "undeflected cap energy exactness", crit3_cap_exactness);
  failed += run_criterion(4, "truncated cone log coefficient", crit4_econe_log_fit);
  failed += run_criterion(5, "integrated curvature of the truncated cone",
                          crit5_gauss_curvature);
  failed += run_criterion(6, "indentation energy scaling", crit6_indentation_scaling);
  failed += run_criterion(7, "construction closure and stretch cancellation",
                          crit7_construction_closure);
  failed += run_criterion(8, "gradients and functionals against plain quadrature",
                          crit8_oracles);
  failed += run_criterion(9, "tilt neutrality and dyadic bending invariance",
                          crit9_invariances);
  failed += run_criterion(10, "slope diagnostics on the minimized profile",
                          crit10_diagnostics);
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
