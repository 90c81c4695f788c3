#include "fvk/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fvk/errors.hpp"

namespace fvk::fitting {

namespace {

void require_spread(const std::vector<double>& x, const char* name) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*hi - *lo <= 1e-12 * std::max(1.0, std::abs(*hi)))
    throw FitError(std::string("fit_scaling: '") + name +
                   "' is constant across the samples, the fit is rank deficient");
}

// ordinary least squares line y = s x + c
std::pair<double, double> line_fit(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = m * sxx - sx * sx;
  return {(m * sxy - sx * sy) / det, (sy * sxx - sx * sxy) / det};
}

double max_rel_residual(const std::vector<Sample>& samples,
                        const std::function<double(const Sample&)>& predict) {
  double worst = 0.0;
  for (const auto& s : samples)
    worst = std::max(worst, std::abs(predict(s) - s.value) / std::abs(s.value));
  return worst;
}

}  // namespace

ScalingFit fit_scaling(const std::vector<Sample>& samples, const std::string& model) {
  if (samples.size() < 2) throw FitError("fit_scaling: need at least 2 samples");

  std::vector<double> h, d, v;
  for (const auto& s : samples) {
    h.push_back(s.h);
    d.push_back(s.delta);
    v.push_back(s.value);
  }

  ScalingFit fit;
  fit.model = model;

  if (model == "A*h^p" || model == "A*delta^q" || model == "A*h^p*delta^q") {
    for (const auto& s : samples)
      if (!(s.value > 0.0))
        throw DomainError("fit_scaling: log-log models need positive values");
    std::vector<double> lv(v.size());
    for (size_t i = 0; i < v.size(); ++i) lv[i] = std::log(v[i]);

    if (model == "A*h^p") {
      for (double x : h)
        if (!(x > 0.0)) throw DomainError("fit_scaling: h must be positive");
      require_spread(h, "h");
      std::vector<double> lh(h.size());
      for (size_t i = 0; i < h.size(); ++i) lh[i] = std::log(h[i]);
      const auto [slope, icept] = line_fit(lh, lv);
      fit.p = slope;
      fit.A = std::exp(icept);
      fit.max_rel_residual = max_rel_residual(
          samples, [&](const Sample& s) { return fit.A * std::pow(s.h, fit.p); });
      return fit;
    }

    if (model == "A*delta^q") {
      for (double x : d)
        if (!(x > 0.0)) throw DomainError("fit_scaling: delta must be positive");
      require_spread(d, "delta");
      std::vector<double> ld(d.size());
      for (size_t i = 0; i < d.size(); ++i) ld[i] = std::log(d[i]);
      const auto [slope, icept] = line_fit(ld, lv);
      fit.q = slope;
      fit.A = std::exp(icept);
      fit.max_rel_residual = max_rel_residual(
          samples, [&](const Sample& s) { return fit.A * std::pow(s.delta, fit.q); });
      return fit;
    }

    // joint model: solve the 3x3 normal equations for [log A, p, q]
    if (samples.size() < 3) throw FitError("fit_scaling: joint model needs 3 samples");
    for (size_t i = 0; i < samples.size(); ++i)
      if (!(h[i] > 0.0) || !(d[i] > 0.0))
        throw DomainError("fit_scaling: h and delta must be positive");
    require_spread(h, "h");
    require_spread(d, "delta");
    double S[3][3] = {};
    double rhs[3] = {};
    for (size_t i = 0; i < samples.size(); ++i) {
      const double row[3] = {1.0, std::log(h[i]), std::log(d[i])};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) S[r][c] += row[r] * row[c];
        rhs[r] += row[r] * std::log(v[i]);
      }
    }
    // Gaussian elimination with partial pivoting
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r = col + 1; r < 3; ++r)
        if (std::abs(S[perm[r]][col]) > std::abs(S[perm[piv]][col])) piv = r;
      std::swap(perm[col], perm[piv]);
      const double diag = S[perm[col]][col];
      if (std::abs(diag) <= 1e-12 * samples.size())
        throw FitError(
            "fit_scaling: log h and log delta are collinear across the samples, "
            "the joint fit is rank deficient");
      for (int r = col + 1; r < 3; ++r) {
        const double f = S[perm[r]][col] / diag;
        for (int c = col; c < 3; ++c) S[perm[r]][c] -= f * S[perm[col]][c];
        rhs[perm[r]] -= f * rhs[perm[col]];
      }
    }
    double sol[3];
    for (int col = 2; col >= 0; --col) {
      double acc = rhs[perm[col]];
      for (int c = col + 1; c < 3; ++c) acc -= S[perm[col]][c] * sol[c];
      sol[col] = acc / S[perm[col]][col];
    }
    fit.A = std::exp(sol[0]);
    fit.p = sol[1];
    fit.q = sol[2];
    fit.max_rel_residual = max_rel_residual(samples, [&](const Sample& s) {
      return fit.A * std::pow(s.h, fit.p) * std::pow(s.delta, fit.q);
    });
    return fit;
  }

  if (model == "C1*h^2*log(1/h)+C2*h^2") {
    for (double x : h)
      if (!(x > 0.0) || !(x < 1.0))
        throw DomainError("fit_scaling: the log model needs h in (0, 1)");
    require_spread(h, "h");
    std::vector<double> xs(h.size()), ys(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
      xs[i] = std::log(1.0 / h[i]);
      ys[i] = v[i] / (h[i] * h[i]);
    }
    const auto [slope, icept] = line_fit(xs, ys);
    fit.A = slope;   // C1
    fit.p = icept;   // C2
    fit.max_rel_residual = max_rel_residual(samples, [&](const Sample& s) {
      return (fit.A * std::log(1.0 / s.h) + fit.p) * s.h * s.h;
    });
    return fit;
  }

  throw FitError("fit_scaling: unknown model '" + model + "'");
}

}  // namespace fvk::fitting
