#include "fvk/optim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "fvk/errors.hpp"

namespace fvk::optim {

namespace {

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool all_finite(double value, std::span<const double> grad) {
  if (!std::isfinite(value)) return false;
  for (double g : grad)
    if (!std::isfinite(g)) return false;
  return true;
}

// Shared Armijo backtracking driver.  `direction` must be a descent
// direction; the caller passes g.direction (negative).  Returns the accepted
// step, or 0 when no step above the stall floor was accepted.
double armijo_search(const Objective& objective, std::span<const double> x,
                     std::span<const double> direction, double f0, double gtd,
                     double step0, const OptimSettings& s,
                     std::vector<double>& x_trial, std::vector<double>& g_trial,
                     double& f_accepted) {
  double step = step0;
  const double floor = 1e-18 * std::max(1.0, step0);
  while (step > floor) {
    for (size_t i = 0; i < x.size(); ++i) x_trial[i] = x[i] + step * direction[i];
    const double ft = objective(x_trial, g_trial);
    if (all_finite(ft, g_trial) && ft <= f0 + s.armijo_c * step * gtd) {
      f_accepted = ft;
      return step;
    }
    step *= s.backtrack_factor;
  }
  return 0.0;
}

}  // namespace

void OptimSettings::validate() const {
  if (max_outer < 1 || max_inner < 1) throw DomainError("OptimSettings: iteration budgets must be positive");
  if (!(grad_tol > 0.0) || !(constraint_tol > 0.0)) throw DomainError("OptimSettings: tolerances must be positive");
  if (!(armijo_c > 0.0) || !(armijo_c < 1.0)) throw DomainError("OptimSettings: armijo_c must lie in (0, 1)");
  if (!(backtrack_factor > 0.0) || !(backtrack_factor < 1.0))
    throw DomainError("OptimSettings: backtrack_factor must lie in (0, 1)");
  if (!(penalty_init > 0.0) || !(penalty_growth > 1.0))
    throw DomainError("OptimSettings: penalty schedule must grow from a positive start");
}

DescentResult descend(const Objective& objective, std::vector<double> init,
                      const OptimSettings& settings) {
  settings.validate();
  const size_t dim = init.size();
  DescentResult res;
  res.x = std::move(init);
  std::vector<double> g(dim), x_trial(dim), g_trial(dim), direction(dim);

  double f = objective(res.x, g);
  if (!all_finite(f, g)) throw NumericError("descend: non-finite objective at the initial point", res.x);
  res.trace.push_back(f);

  double step = 1.0;
  for (int it = 0; it < settings.max_inner; ++it) {
    res.grad_sup_norm = sup_norm(g);
    if (res.grad_sup_norm < settings.grad_tol) {
      res.converged = true;
      break;
    }
    for (size_t i = 0; i < dim; ++i) direction[i] = -g[i];
    const double gtd = -dot(g, g);
    double f_next = f;
    const double taken = armijo_search(objective, res.x, direction, f, gtd,
                                       std::min(step / settings.backtrack_factor, 1e8),
                                       settings, x_trial, g_trial, f_next);
    if (taken == 0.0) break;  // stalled line search, return the best point so far
    step = taken;
    res.x.swap(x_trial);
    g.swap(g_trial);
    f = f_next;
    res.trace.push_back(f);
    res.iterations = it + 1;
  }
  if (!res.converged) res.grad_sup_norm = sup_norm(g);
  res.converged = res.converged || res.grad_sup_norm < settings.grad_tol;
  res.value = f;
  return res;
}

DescentResult descend_lbfgs(const Objective& objective, std::vector<double> init,
                            const OptimSettings& settings, int memory) {
  settings.validate();
  if (memory < 1) throw DomainError("descend_lbfgs: memory must be positive");
  const size_t dim = init.size();
  DescentResult res;
  res.x = std::move(init);
  std::vector<double> g(dim), x_trial(dim), g_trial(dim), direction(dim), q(dim);

  double f = objective(res.x, g);
  if (!all_finite(f, g)) throw NumericError("descend_lbfgs: non-finite objective at the initial point", res.x);
  res.trace.push_back(f);

  std::deque<std::vector<double>> S, Y;
  std::deque<double> rho;

  for (int it = 0; it < settings.max_inner; ++it) {
    res.grad_sup_norm = sup_norm(g);
    if (res.grad_sup_norm < settings.grad_tol) {
      res.converged = true;
      break;
    }

    // two loop recursion
    q.assign(g.begin(), g.end());
    std::vector<double> alpha(S.size());
    for (int k = static_cast<int>(S.size()) - 1; k >= 0; --k) {
      alpha[k] = rho[k] * dot(S[k], q);
      for (size_t i = 0; i < dim; ++i) q[i] -= alpha[k] * Y[k][i];
    }
    double gamma = 1.0;
    if (!S.empty()) {
      const double yy = dot(Y.back(), Y.back());
      if (yy > 0.0) gamma = dot(S.back(), Y.back()) / yy;
    }
    for (size_t i = 0; i < dim; ++i) q[i] *= gamma;
    for (size_t k = 0; k < S.size(); ++k) {
      const double beta = rho[k] * dot(Y[k], q);
      for (size_t i = 0; i < dim; ++i) q[i] += (alpha[k] - beta) * S[k][i];
    }
    for (size_t i = 0; i < dim; ++i) direction[i] = -q[i];

    double gtd = dot(g, direction);
    if (!(gtd < 0.0)) {  // stale curvature pairs, fall back to steepest descent
      S.clear(); Y.clear(); rho.clear();
      for (size_t i = 0; i < dim; ++i) direction[i] = -g[i];
      gtd = -dot(g, g);
    }

    double f_next = f;
    const double taken = armijo_search(objective, res.x, direction, f, gtd, 1.0,
                                       settings, x_trial, g_trial, f_next);
    if (taken == 0.0) break;

    std::vector<double> s_vec(dim), y_vec(dim);
    for (size_t i = 0; i < dim; ++i) {
      s_vec[i] = x_trial[i] - res.x[i];
      y_vec[i] = g_trial[i] - g[i];
    }
    const double sy = dot(s_vec, y_vec);
    if (sy > 1e-12 * std::sqrt(dot(s_vec, s_vec)) * std::sqrt(dot(y_vec, y_vec))) {
      S.push_back(std::move(s_vec));
      Y.push_back(std::move(y_vec));
      rho.push_back(1.0 / sy);
      if (static_cast<int>(S.size()) > memory) {
        S.pop_front(); Y.pop_front(); rho.pop_front();
      }
    }

    res.x.swap(x_trial);
    g.swap(g_trial);
    f = f_next;
    res.trace.push_back(f);
    res.iterations = it + 1;
  }
  if (!res.converged) res.grad_sup_norm = sup_norm(g);
  res.converged = res.converged || res.grad_sup_norm < settings.grad_tol;
  res.value = f;
  return res;
}

ConstrainedResult augmented_lagrangian(const Objective& objective,
                                       const Objective& constraint,
                                       std::vector<double> init,
                                       const OptimSettings& settings,
                                       bool quasi_newton_inner) {
  settings.validate();
  const size_t dim = init.size();
  std::vector<double> gf(dim), gc(dim);

  // Least squares multiplier estimate at the starting point, so a first order
  // optimal init is a genuine fixed point of the loop.
  double lambda = 0.0;
  {
    objective(init, gf);
    constraint(init, gc);
    const double gcgc = dot(gc, gc);
    if (gcgc > 1e-300) lambda = -dot(gf, gc) / gcgc;
  }

  double rho = settings.penalty_init;
  ConstrainedResult out;
  out.x = std::move(init);

  double prev_abs_c = std::numeric_limits<double>::infinity();
  for (int outer = 0; outer < settings.max_outer; ++outer) {
    out.outer_iterations = outer + 1;

    std::vector<double> grad_c_buf(dim);
    const Objective lag = [&](std::span<const double> x, std::span<double> grad) {
      const double fv = objective(x, grad);
      const double cv = constraint(x, grad_c_buf);
      const double w = lambda + rho * cv;
      for (size_t i = 0; i < dim; ++i) grad[i] += w * grad_c_buf[i];
      return fv + lambda * cv + 0.5 * rho * cv * cv;
    };

    DescentResult inner = quasi_newton_inner
                              ? descend_lbfgs(lag, std::move(out.x), settings)
                              : descend(lag, std::move(out.x), settings);
    out.x = std::move(inner.x);

    const double cv = constraint(out.x, gc);
    out.constraint_value = cv;
    if (std::abs(cv) <= settings.constraint_tol && inner.converged) {
      out.value = objective(out.x, gf);
      // the inner solve was stationary for the shifted multiplier, report that
      out.multiplier = lambda + rho * cv;
      out.converged = true;
      return out;
    }

    lambda += rho * cv;
    if (std::abs(cv) > 0.5 * prev_abs_c) rho *= settings.penalty_growth;
    prev_abs_c = std::abs(cv);

    if (rho > 1e12 && std::abs(cv) > settings.constraint_tol)
      throw ConvergenceError("augmented_lagrangian: penalty exhausted without feasibility",
                             out.x, cv);
  }

  out.value = objective(out.x, gf);
  out.multiplier = lambda;
  out.converged = std::abs(out.constraint_value) <= settings.constraint_tol;
  if (!out.converged)
    throw ConvergenceError("augmented_lagrangian: outer iteration budget exhausted",
                           out.x, out.constraint_value);
  return out;
}

double gradient_check(const Objective& objective, std::span<const double> point,
                      double step) {
  if (!(step > 0.0)) throw DomainError("gradient_check: step must be positive");
  const size_t dim = point.size();
  std::vector<double> x(point.begin(), point.end());
  std::vector<double> g(dim), scratch(dim);
  objective(x, g);
  const double gscale = std::max(1.0, sup_norm(g));

  double worst = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    const double saved = x[i];
    x[i] = saved + step;
    const double fp = objective(x, scratch);
    x[i] = saved - step;
    const double fm = objective(x, scratch);
    x[i] = saved;
    const double fd = (fp - fm) / (2.0 * step);
    const double denom = std::max({std::abs(fd), std::abs(g[i]), 1e-6 * gscale});
    worst = std::max(worst, std::abs(fd - g[i]) / denom);
  }
  return worst;
}

}  // namespace fvk::optim
