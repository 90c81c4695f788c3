#include "fvk/cap.hpp"

#include <algorithm>
#include <cmath>

#include "fvk/errors.hpp"
#include "fvk/quadrature.hpp"
#include "fvk/stencil.hpp"

namespace fvk::cap {

namespace {

void check_params(double h, double delta) {
  if (!(h > 0.0) || !(h <= 0.5)) throw DomainError("cap: h must lie in (0, 1/2]");
  if (!(delta >= 0.0) || !(delta <= 1.0)) throw DomainError("cap: delta must lie in [0, 1]");
}

double trapz(std::span<const double> f, std::span<const double> x) {
  double acc = 0.0;
  for (size_t i = 0; i + 1 < f.size(); ++i)
    acc += 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
  return acc;
}

}  // namespace

void CapProfile::validate_shape() const {
  grid.validate();
  if (grid.n() < 4) throw ResolutionError("CapProfile: need at least 4 radial nodes");
  if (static_cast<int>(u.size()) != grid.n() || static_cast<int>(w.size()) != grid.n())
    throw DimensionError("CapProfile: u and w must match the grid");
}

AdmissibilityReport admissibility(const CapProfile& p, double delta) {
  p.validate_shape();
  AdmissibilityReport rep;
  // cell centered nodes sit at spacing/2, 3 spacing/2, 5 spacing/2, ...
  rep.w_zero_linear = std::abs(1.5 * p.w[0] - 0.5 * p.w[1]);
  rep.w_zero_quadratic = std::abs((15.0 * p.w[0] - 10.0 * p.w[1] + 3.0 * p.w[2]) / 8.0);
  rep.u_zero_linear = std::abs(1.5 * p.u[0] - 0.5 * p.u[1]);
  rep.w_boundary_error = std::abs(p.w.back() - (1.0 - delta));
  return rep;
}

EnergyBreakdown cap_energy(const CapProfile& p, double h) {
  p.validate_shape();
  if (!(h > 0.0)) throw DomainError("cap_energy: h must be positive");
  const int n = p.grid.n();
  const double dr = p.grid.spacing;
  const std::vector<double> du = d1(p.u, p.grid);
  const std::vector<double> dw = d1(p.w, p.grid);
  const std::vector<double> ddw = d2(p.w, p.grid);

  double mem_u = 0.0, mem_s = 0.0, bend = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wgt = (i == 0 || i == n - 1) ? 0.5 * dr : dr;
    const double r = p.grid.r[i];
    const double m = du[i] + dw[i] * dw[i] - 4.0 * r * r;
    mem_u += wgt * p.u[i] * p.u[i] / r;
    mem_s += wgt * r * m * m;
    bend += wgt * (r * ddw[i] * ddw[i] + dw[i] * dw[i] / r);
  }
  return EnergyBreakdown::make(mem_u, mem_s, h * h * bend);
}

CapGradient cap_gradient(const CapProfile& p, double h) {
  p.validate_shape();
  if (!(h > 0.0)) throw DomainError("cap_gradient: h must be positive");
  const int n = p.grid.n();
  const double dr = p.grid.spacing;
  const std::vector<double> du = d1(p.u, p.grid);
  const std::vector<double> dw = d1(p.w, p.grid);
  const std::vector<double> ddw = d2(p.w, p.grid);

  std::vector<double> cu(n), cw1(n), cw2(n);
  CapGradient g;
  g.du.resize(n);
  for (int i = 0; i < n; ++i) {
    const double wgt = (i == 0 || i == n - 1) ? 0.5 * dr : dr;
    const double r = p.grid.r[i];
    const double m = du[i] + dw[i] * dw[i] - 4.0 * r * r;
    g.du[i] = 2.0 * wgt * p.u[i] / r;
    cu[i] = 2.0 * wgt * r * m;
    cw1[i] = wgt * (4.0 * r * m * dw[i] + 2.0 * h * h * dw[i] / r);
    cw2[i] = wgt * 2.0 * h * h * r * ddw[i];
  }
  const std::vector<double> tu = d1_adjoint(cu, p.grid);
  const std::vector<double> tw1 = d1_adjoint(cw1, p.grid);
  const std::vector<double> tw2 = d2_adjoint(cw2, p.grid);
  g.dw.resize(n);
  for (int i = 0; i < n; ++i) {
    g.du[i] += tu[i];
    g.dw[i] = tw1[i] + tw2[i];
  }
  g.dw.back() = 0.0;  // w(1) is pinned
  return g;
}

RlChoice choose_Rl(double h, double delta) {
  check_params(h, delta);
  RlChoice c;
  if (delta >= h) {
    c.R = std::sqrt((delta - 0.5 * h) / 2.0);
    c.l = 0.5 * std::sqrt(h);
  } else {
    // shallow regime: shrink both scales with the depth, R^2 + l^2 = delta/2
    c.R = 0.8 * std::sqrt(0.5 * delta);
    c.l = 0.6 * std::sqrt(0.5 * delta);
  }
  c.feasible = (c.R > 0.0) && (2.0 * c.l < c.R);
  return c;
}

double ConnectorSpec::slope(double x) const {
  return c[0] + x * (c[1] + x * (c[2] + x * c[3]));
}

double ConnectorSpec::height(double x) const {
  return c[0] * (x + 1.0) + c[1] * (x * x - 1.0) / 2.0 +
         c[2] * (x * x * x + 1.0) / 3.0 + c[3] * (x * x * x * x - 1.0) / 4.0;
}

double ConnectorSpec::stretch_primitive(double x) const {
  const double q[7] = {c[0] * c[0],
                       2.0 * c[0] * c[1],
                       c[1] * c[1] + 2.0 * c[0] * c[2],
                       2.0 * (c[0] * c[3] + c[1] * c[2]),
                       c[2] * c[2] + 2.0 * c[1] * c[3],
                       2.0 * c[2] * c[3],
                       c[3] * c[3]};
  double acc = 0.0, xp = 1.0, sp = 1.0;  // x^(k+1), (-1)^(k+1)
  for (int k = 0; k < 7; ++k) {
    xp *= x;
    sp *= -1.0;
    acc += q[k] * (xp - sp) / (k + 1);
  }
  return acc;
}

double ConnectorSpec::sm1_left() const { return slope(-1.0) + 2.0 * (R - l); }
double ConnectorSpec::sm1_right() const { return slope(1.0) - 2.0 * (R + l); }
double ConnectorSpec::height_closure() const { return height(1.0); }

double ConnectorSpec::sm2_residual() const {
  const double a = R - l, b = R + l;
  return (4.0 / 3.0) * (b * b * b - a * a * a) - l * stretch_primitive(1.0);
}

ConnectorSpec build_connector(double R, double l) {
  if (!(R >= 0.0) || !(l >= 0.0) || l > R)
    throw ConstructionError("build_connector: need 0 <= l <= R");
  ConnectorSpec spec;
  spec.R = R;
  spec.l = l;
  if (l == 0.0) return spec;  // degenerate, no connector region

  const auto with_s = [&](double s) {
    ConnectorSpec t = spec;
    t.c = {-l, 2.0 * R - s, 3.0 * l, s};  // endpoint slopes and zero mean built in
    return t;
  };
  // the net stretch residual is decreasing in s towards -inf and positive at
  // s = 0; bracket the negative root and bisect
  double lo = -(14.0 * R + 7.0 * l + 1.0), hi = 0.0;
  if (!(with_s(lo).sm2_residual() < 0.0) || !(with_s(hi).sm2_residual() > 0.0))
    throw ConstructionError("build_connector: stretch residual failed to bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, -lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    (with_s(mid).sm2_residual() > 0.0 ? hi : lo) = mid;
  }
  return with_s(0.5 * (lo + hi));
}

CapProfile build_inversion(double h, double delta, const RadialGrid& grid) {
  check_params(h, delta);
  grid.validate();
  const int n = grid.n();
  CapProfile out{grid, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  if (delta == 0.0) {
    for (int i = 0; i < n; ++i) out.w[i] = grid.r[i] * grid.r[i];
    return out;
  }
  const RlChoice rl = choose_Rl(h, delta);
  if (!rl.feasible)
    throw ConstructionError("build_inversion: connector does not fit, need delta > 5h/2");
  const ConnectorSpec conn = build_connector(rl.R, rl.l);
  const double a = rl.R - rl.l, b = rl.R + rl.l;
  // bisection leaves a tiny net stretch; bleed it off linearly across the
  // connector so u returns to zero exactly at the outer junction
  const double leak = conn.sm2_residual();
  for (int i = 0; i < n; ++i) {
    const double r = grid.r[i];
    if (r < a) {
      out.w[i] = -r * r;
    } else if (r <= b) {
      const double x = (r - rl.R) / rl.l;
      out.w[i] = -a * a + rl.l * conn.height(x);
      out.u[i] = (4.0 / 3.0) * (r * r * r - a * a * a) -
                 rl.l * conn.stretch_primitive(x) - leak * (r - a) / (b - a);
    } else {
      out.w[i] = r * r - delta;
    }
  }
  return out;
}

MinimizeResult minimize_cap(double h, double delta, const CapProfile& init,
                            double grad_tol, const optim::OptimSettings& settings) {
  check_params(h, delta);
  init.validate_shape();
  if (!(grad_tol > 0.0)) throw DomainError("minimize_cap: grad_tol must be positive");

  const CapDofMap map{init.grid.n(), delta};
  CapProfile work = init;
  const auto objective = [&](std::span<const double> x, std::span<double> g) {
    map.unpack(x, work);
    const std::vector<double> folded = map.fold_gradient(cap_gradient(work, h));
    std::copy(folded.begin(), folded.end(), g.begin());
    return cap_energy(work, h).total;
  };

  std::vector<double> x0 = map.pack(init);
  map.unpack(x0, work);
  const double initial = cap_energy(work, h).total;

  optim::OptimSettings s = settings;
  s.grad_tol = grad_tol;
  const optim::DescentResult res = optim::descend_lbfgs(objective, x0, s);

  MinimizeResult out;
  map.unpack(res.x, work);
  out.profile = work;
  out.energy = cap_energy(work, h);
  out.iterations = res.iterations;
  out.budget_exhausted = !res.converged;
  out.grad_sup_norm = res.grad_sup_norm;
  out.initial_energy = initial;
  return out;
}

double tau(const CapProfile& p) {
  p.validate_shape();
  const std::vector<double> dw = d1(p.w, p.grid);
  double worst = 0.0;
  for (int i = 0; i < p.grid.n(); ++i) {
    const double r = p.grid.r[i], s = dw[i];
    const bool in_well = (s > 1.5 * r && s < 2.5 * r) || (s > -2.5 * r && s < -1.5 * r);
    if (!in_well) worst = r;  // nodes ascend, so the last hit is the largest
  }
  return worst;
}

GaProfile g_a_profile(const CapProfile& p, double a) {
  p.validate_shape();
  if (!(a > 0.0) || !(2.0 * a <= 1.0 + 1e-12))
    throw DomainError("g_a_profile: need [a, 2a] inside (0, 1]");
  const std::vector<double> dw = d1(p.w, p.grid);

  GaProfile out;
  std::vector<double> f;
  for (int i = 0; i < p.grid.n(); ++i) {
    const double r = p.grid.r[i];
    if (r < a - 1e-12 || r > 2.0 * a + 1e-12) continue;
    out.r.push_back(r);
    f.push_back(4.0 * r * r - dw[i] * dw[i]);
  }
  if (out.r.size() < 16)
    throw ResolutionError("g_a_profile: fewer than 16 nodes in the doubling interval");

  out.values = cumtrapz(f, out.r);
  const double span = out.r.back() - out.r.front();
  const double mean = trapz(out.values, out.r) / span;
  for (auto& v : out.values) v -= mean;
  std::vector<double> sq(out.values.size());
  for (size_t i = 0; i < sq.size(); ++i) sq[i] = out.values[i] * out.values[i];
  out.l2_norm = std::sqrt(trapz(sq, out.r));
  return out;
}

LowerBoundReport lower_bound_report(const CapProfile& p, double h, double delta) {
  check_params(h, delta);
  if (admissibility(p, delta).w_boundary_error > 1e-6)
    throw PreconditionError("lower_bound_report: profile boundary does not match delta");

  LowerBoundReport rep;
  rep.energy = cap_energy(p, h).total;
  rep.tau_value = tau(p);
  const double t3 = rep.tau_value * rep.tau_value * rep.tau_value;
  rep.interp_left = std::min(t3 * t3, t3 * std::pow(h, 1.5));
  rep.interp_ratio = rep.interp_left / rep.energy;
  rep.thickness_ratio = h * h / rep.energy;

  const std::vector<double> dw = d1(p.w, p.grid);
  std::vector<double> absdw(dw.size());
  for (size_t i = 0; i < dw.size(); ++i) absdw[i] = std::abs(dw[i]);
  const double s = 0.5;
  rep.slope_l1 = integrate_window(absdw, p.grid, 0.0, s);
  rep.slope_l1_bound = (s / h) * std::sqrt(rep.energy);
  rep.slope_l1_ratio = rep.slope_l1 / rep.slope_l1_bound;

  rep.ga_a = 0.25;
  rep.ga_norm = g_a_profile(p, rep.ga_a).l2_norm;
  rep.ga_ratio = rep.ga_norm / std::sqrt(rep.ga_a * rep.energy);
  return rep;
}

std::vector<double> CapDofMap::pack(const CapProfile& p) const {
  if (static_cast<int>(p.u.size()) != n || static_cast<int>(p.w.size()) != n)
    throw DimensionError("CapDofMap: profile does not match the map size");
  std::vector<double> x(dim());
  for (int i = 1; i < n; ++i) x[i - 1] = p.u[i];
  for (int i = 1; i < n - 1; ++i) x[n - 2 + i] = p.w[i];
  return x;
}

void CapDofMap::unpack(std::span<const double> x, CapProfile& p) const {
  if (static_cast<int>(x.size()) != dim())
    throw DimensionError("CapDofMap: free vector has the wrong size");
  p.u.resize(n);
  p.w.resize(n);
  for (int i = 1; i < n; ++i) p.u[i] = x[i - 1];
  for (int i = 1; i < n - 1; ++i) p.w[i] = x[n - 2 + i];
  p.u[0] = p.u[1] / 3.0;  // linear extrapolation through r = 0
  p.w[0] = p.w[1] / 3.0;
  p.w[n - 1] = 1.0 - delta;
}

std::vector<double> CapDofMap::fold_gradient(const CapGradient& g) const {
  if (static_cast<int>(g.du.size()) != n || static_cast<int>(g.dw.size()) != n)
    throw DimensionError("CapDofMap: gradient does not match the map size");
  std::vector<double> out(dim());
  for (int i = 1; i < n; ++i) out[i - 1] = g.du[i];
  for (int i = 1; i < n - 1; ++i) out[n - 2 + i] = g.dw[i];
  out[0] += g.du[0] / 3.0;  // the tied node rides along with node 1
  out[n - 1] += g.dw[0] / 3.0;
  return out;
}

}  // namespace fvk::cap
