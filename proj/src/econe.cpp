#include "fvk/econe.hpp"

#include <cmath>
#include <numbers>

#include "fvk/circle.hpp"
#include "fvk/errors.hpp"

namespace fvk::econe {

namespace {

constexpr double kPi = std::numbers::pi;

// Angular profiles of the displacement pair, evaluated once per angle.
struct AngularProfiles {
  std::vector<double> alpha;  // out of plane amplitude
  std::vector<double> u;      // radial, -alpha^2/2
  std::vector<double> v;      // tangential, mean zero primitive of
                              // (Delta^2 + alpha^2 - alpha'^2)/2
};

AngularProfiles angular_profiles(const FourierCurve& alpha, double Delta,
                                 const PolarGrid& grid) {
  const FourierCurve asq = FourierCurve::product(alpha, alpha);
  const FourierCurve ad = alpha.derivative();
  const FourierCurve adsq = FourierCurve::product(ad, ad);

  FourierCurve integrand(asq.order());
  integrand.a0 = 0.5 * (Delta * Delta + asq.a0 - adsq.a0);  // ~0 when feasible
  for (int n = 1; n <= integrand.order(); ++n) {
    integrand.a[n - 1] = 0.5 * (asq.a[n - 1] - adsq.a[n - 1]);
    integrand.b[n - 1] = 0.5 * (asq.b[n - 1] - adsq.b[n - 1]);
  }
  const FourierCurve v = integrand.antiderivative_mean_zero();

  AngularProfiles p;
  p.alpha = alpha.sample(grid.t);
  p.u = asq.sample(grid.t);
  for (auto& x : p.u) x *= -0.5;
  p.v = v.sample(grid.t);
  return p;
}

EConeFields assemble(const std::vector<double>& radial,
                     const AngularProfiles& ang, const PolarGrid& grid) {
  const int nr = grid.nr(), nt = grid.nt();
  EConeFields f{PolarField(nr, nt), PolarField(nr, nt), PolarField(nr, nt)};
  for (int i = 0; i < nr; ++i) {
    const double rho = radial[i];
    double* ur = &f.u_r.data[static_cast<size_t>(i) * nt];
    double* up = &f.u_phi.data[static_cast<size_t>(i) * nt];
    double* w = &f.w.data[static_cast<size_t>(i) * nt];
    for (int j = 0; j < nt; ++j) {
      ur[j] = rho * ang.u[j];
      up[j] = rho * ang.v[j];
      w[j] = rho * ang.alpha[j];
    }
  }
  return f;
}

}  // namespace

double truncation_eta(double s) {
  if (s <= 0.5) return 0.0;
  if (s >= 1.0) return s;
  // unique quintic on [1/2, 1] with value/slope/curvature matching both ends
  const double x = 2.0 * s - 1.0;
  return ((4.5 * x - 11.5) * x + 8.0) * x * x * x;
}

void EConeConfig::validate() const {
  alpha.validate();
  if (!(Delta > 0.0)) throw DomainError("EConeConfig: Delta must be positive");
  if (!(h > 0.0) || !(h <= 0.5)) throw DomainError("EConeConfig: h must lie in (0, 1/2]");
  const double target = 2.0 * kPi * Delta * Delta;
  const double c = circle::constraint_value(alpha);
  if (std::abs(c - target) > 1e-8 * target)
    throw PreconditionError(
        "EConeConfig: alpha violates the excess length constraint, the "
        "tangential displacement would not close up");
}

EConeFields build_truncated_pair(const EConeConfig& config, const PolarGrid& grid) {
  config.validate();
  if (grid.dr > config.h / 8.0 * (1.0 + 1e-12))
    throw ResolutionError("build_truncated_pair: need at least 8 radial cells below h");
  std::vector<double> radial(grid.nr());
  for (int i = 0; i < grid.nr(); ++i)
    radial[i] = config.h * truncation_eta(grid.r[i] / config.h);
  return assemble(radial, angular_profiles(config.alpha, config.Delta, grid), grid);
}

EConeFields build_homogeneous_pair(const FourierCurve& alpha, double Delta,
                                   const PolarGrid& grid) {
  EConeConfig probe{alpha, Delta, 0.25};
  probe.validate();
  return assemble(grid.r, angular_profiles(alpha, Delta, grid), grid);
}

EnergyBreakdown fvk_energy_polar(const EConeFields& fields, double Delta,
                                 double h, const PolarGrid& grid,
                                 double r_lo, double r_hi) {
  const int nr = grid.nr(), nt = grid.nt();
  if (fields.w.nr != nr || fields.w.nt != nt || fields.u_r.nr != nr ||
      fields.u_phi.nr != nr || fields.u_r.nt != nt || fields.u_phi.nt != nt)
    throw DimensionError("fvk_energy_polar: field shape does not match grid");
  if (!(h > 0.0)) throw DomainError("fvk_energy_polar: h must be positive");
  if (!(r_lo < r_hi)) throw DomainError("fvk_energy_polar: empty radial window");

  int i0 = 0;
  while (i0 < nr && grid.r[i0] < r_lo - 1e-12) ++i0;
  int i1 = nr - 1;
  while (i1 >= 0 && grid.r[i1] > r_hi + 1e-12) --i1;
  if (i1 - i0 < 1) throw ResolutionError("fvk_energy_polar: window holds fewer than 2 radial nodes");

  const double dr = grid.dr, dt = grid.dt;
  const double i2dr = 1.0 / (2.0 * dr), idr2 = 1.0 / (dr * dr);
  const double i2dt = 1.0 / (2.0 * dt), idt2 = 1.0 / (dt * dt);
  const double Dl2 = Delta * Delta;

  const auto val = [nt](const PolarField& f, int i, int j) {
    return f.data[static_cast<size_t>(i) * nt + j];
  };
  // radial first derivative, central inside, one sided second order at the ends
  const auto ddr = [&](const PolarField& f, int i, int j) {
    if (i == 0) return (-3.0 * val(f, 0, j) + 4.0 * val(f, 1, j) - val(f, 2, j)) * i2dr;
    if (i == nr - 1)
      return (3.0 * val(f, nr - 1, j) - 4.0 * val(f, nr - 2, j) + val(f, nr - 3, j)) * i2dr;
    return (val(f, i + 1, j) - val(f, i - 1, j)) * i2dr;
  };
  const auto ddrr = [&](const PolarField& f, int i, int j) {
    if (i == 0)
      return (2.0 * val(f, 0, j) - 5.0 * val(f, 1, j) + 4.0 * val(f, 2, j) - val(f, 3, j)) * idr2;
    if (i == nr - 1)
      return (2.0 * val(f, nr - 1, j) - 5.0 * val(f, nr - 2, j) + 4.0 * val(f, nr - 3, j) -
              val(f, nr - 4, j)) * idr2;
    return (val(f, i - 1, j) - 2.0 * val(f, i, j) + val(f, i + 1, j)) * idr2;
  };

  double mem = 0.0, bend = 0.0;
  for (int i = i0; i <= i1; ++i) {
    const double r = grid.r[i];
    const double wr_radial = (i == i0 || i == i1) ? 0.5 * dr : dr;
    const double weight = wr_radial * dt * r;
    double mem_row = 0.0, bend_row = 0.0;
    for (int j = 0; j < nt; ++j) {
      const int jp = (j + 1 == nt) ? 0 : j + 1;
      const int jm = (j == 0) ? nt - 1 : j - 1;

      const double Wr = ddr(fields.w, i, j);
      const double Wrr = ddrr(fields.w, i, j);
      const double Wp = (val(fields.w, i, jp) - val(fields.w, i, jm)) * i2dt;
      const double Wpp =
          (val(fields.w, i, jm) - 2.0 * val(fields.w, i, j) + val(fields.w, i, jp)) * idt2;
      const double Wrp = (ddr(fields.w, i, jp) - ddr(fields.w, i, jm)) * i2dt;

      const double Urr = ddr(fields.u_r, i, j);
      const double Urp = (val(fields.u_r, i, jp) - val(fields.u_r, i, jm)) * i2dt;
      const double Upr = ddr(fields.u_phi, i, j);
      const double Upp = (val(fields.u_phi, i, jp) - val(fields.u_phi, i, jm)) * i2dt;

      const double Mrr = 2.0 * Urr + Wr * Wr;
      const double Mpp = 2.0 * (Upp + val(fields.u_r, i, j)) / r + (Wp / r) * (Wp / r) - Dl2;
      const double Mrp = Upr + (Urp - val(fields.u_phi, i, j)) / r + Wr * Wp / r;
      mem_row += Mrr * Mrr + Mpp * Mpp + 2.0 * Mrp * Mrp;

      const double Hrr = Wrr;
      const double Hrp = Wrp / r - Wp / (r * r);
      const double Hpp = Wpp / (r * r) + Wr / r;
      bend_row += Hrr * Hrr + 2.0 * Hrp * Hrp + Hpp * Hpp;
    }
    mem += weight * mem_row;
    bend += weight * bend_row;
  }
  return EnergyBreakdown::make(0.0, mem, h * h * bend);
}

double gauss_curvature(const PolarField& w, double r, const PolarGrid& grid) {
  const int nr = grid.nr(), nt = grid.nt();
  if (w.nr != nr || w.nt != nt)
    throw DimensionError("gauss_curvature: field shape does not match grid");
  int idx = -1;
  for (int i = 0; i < nr; ++i) {
    if (std::abs(grid.r[i] - r) <= 1e-12) {
      idx = i;
      break;
    }
  }
  if (idx < 0) throw DomainError("gauss_curvature: r is not a grid radius");
  if (idx == 0 || idx == nr - 1)
    throw DomainError("gauss_curvature: r must be an interior grid radius");

  const double i2dr = 1.0 / (2.0 * grid.dr), i2dt = 1.0 / (2.0 * grid.dt);
  const auto val = [&](int i, int j) { return w.data[static_cast<size_t>(i) * nt + j]; };

  std::vector<double> wr(nt), wp(nt), prod(nt);
  for (int j = 0; j < nt; ++j) {
    const int jp = (j + 1 == nt) ? 0 : j + 1;
    const int jm = (j == 0) ? nt - 1 : j - 1;
    wr[j] = (val(idx + 1, j) - val(idx - 1, j)) * i2dr;
    wp[j] = (val(idx, jp) - val(idx, jm)) * i2dt;
    prod[j] = wr[j] * wp[j];
  }
  double acc = 0.0;
  for (int j = 0; j < nt; ++j) {
    const int jp = (j + 1 == nt) ? 0 : j + 1;
    const int jm = (j == 0) ? nt - 1 : j - 1;
    const double dprod = (prod[jp] - prod[jm]) * i2dt;
    acc += wr[j] * wr[j] - (wp[j] / r) * (wp[j] / r) + dprod / r;
  }
  return 0.5 * acc * grid.dt;
}

LogFit fit_log_coefficient(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 4)
    throw FitError("fit_log_coefficient: need at least 4 samples");
  double hmin = samples.front().first, hmax = samples.front().first;
  for (const auto& [h, e] : samples) {
    if (!(h > 0.0) || !(h < 1.0)) throw DomainError("fit_log_coefficient: h must lie in (0, 1)");
    hmin = std::min(hmin, h);
    hmax = std::max(hmax, h);
  }
  if (hmax / hmin < 32.0)
    throw FitError("fit_log_coefficient: thickness range too narrow for a stable fit");

  // least squares line y = C1 x + C2 with x = log(1/h), y = E/h^2
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(samples.size());
  for (const auto& [h, e] : samples) {
    const double x = std::log(1.0 / h), y = e / (h * h);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double det = m * sxx - sx * sx;
  LogFit fit;
  fit.C1 = (m * sxy - sx * sy) / det;
  fit.C2 = (sy * sxx - sx * sxy) / det;
  for (const auto& [h, e] : samples) {
    const double x = std::log(1.0 / h), y = e / (h * h);
    const double pred = fit.C1 * x + fit.C2;
    fit.max_rel_residual = std::max(fit.max_rel_residual, std::abs(pred - y) / std::abs(y));
  }
  return fit;
}

}  // namespace fvk::econe
