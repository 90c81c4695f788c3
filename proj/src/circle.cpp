#include "fvk/circle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "fvk/errors.hpp"

namespace fvk::circle {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficient layout used by the solver: x = [a0, a_1..a_N, b_1..b_N].
// Both functionals are diagonal quadratic forms in this vector.
struct Quadratics {
  std::vector<double> e;  // energy weights
  std::vector<double> c;  // constraint weights

  explicit Quadratics(int N) : e(2 * N + 1), c(2 * N + 1) {
    e[0] = 2.0 * kPi;
    c[0] = -2.0 * kPi;
    for (int n = 1; n <= N; ++n) {
      const double ee = kPi * (1.0 - n * n) * (1.0 - n * n);
      const double cc = kPi * (n * n - 1.0);
      e[n] = e[N + n] = ee;
      c[n] = c[N + n] = cc;
    }
  }
};

FourierCurve to_curve(std::span<const double> x, int N) {
  FourierCurve f(N);
  f.a0 = x[0];
  for (int n = 1; n <= N; ++n) {
    f.a[n - 1] = x[n];
    f.b[n - 1] = x[N + n];
  }
  return f;
}

std::vector<double> to_vector(const FourierCurve& f) {
  const int N = f.order();
  std::vector<double> x(2 * N + 1);
  x[0] = f.a0;
  for (int n = 1; n <= N; ++n) {
    x[n] = f.a[n - 1];
    x[N + n] = f.b[n - 1];
  }
  return x;
}

// uniform double in [-1, 1), bit-stable across platforms
double canonical(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

double energy(const FourierCurve& alpha) {
  alpha.validate();
  double s = 2.0 * kPi * alpha.a0 * alpha.a0;
  for (int n = 1; n <= alpha.order(); ++n) {
    const double f = (1.0 - static_cast<double>(n) * n);
    s += kPi * f * f * alpha.mode_mass(n);
  }
  return s;
}

double constraint_value(const FourierCurve& alpha) {
  alpha.validate();
  double s = -2.0 * kPi * alpha.a0 * alpha.a0;
  for (int n = 1; n <= alpha.order(); ++n)
    s += kPi * (static_cast<double>(n) * n - 1.0) * alpha.mode_mass(n);
  return s;
}

std::vector<std::pair<int, double>> mode_energy_table(double Delta, int n_max) {
  if (!(Delta > 0.0)) throw DomainError("mode_energy_table: Delta must be positive");
  if (n_max < 2) throw DomainError("mode_energy_table: need n_max >= 2");
  std::vector<std::pair<int, double>> table;
  table.reserve(n_max - 1);
  for (int n = 2; n <= n_max; ++n)
    table.emplace_back(n, 2.0 * kPi * Delta * Delta * (static_cast<double>(n) * n - 1.0));
  return table;
}

double el_residual(const FourierCurve& alpha, double lambda) {
  alpha.validate();
  const double f0 = 1.0 + lambda;
  double s = 2.0 * kPi * f0 * f0 * alpha.a0 * alpha.a0;
  for (int n = 1; n <= alpha.order(); ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double f = n2 * n2 - (2.0 + lambda) * n2 + (1.0 + lambda);
    s += kPi * f * f * alpha.mode_mass(n);
  }
  return std::sqrt(s);
}

double mass_outside_12(const FourierCurve& alpha) {
  const double total = alpha.total_mass();
  if (total == 0.0) return 0.0;
  double inside = 0.0;
  if (alpha.order() >= 1) inside += alpha.mode_mass(1);
  if (alpha.order() >= 2) inside += alpha.mode_mass(2);
  return (total - inside) / total;
}

CircleSolution solve_min(double Delta, int N, double tol,
                         const optim::OptimSettings& settings,
                         std::optional<FourierCurve> init) {
  if (Delta < 0.0) throw DomainError("solve_min: Delta must be nonnegative");
  if (N < 4) throw DomainError("solve_min: need Fourier order N >= 4");
  if (!(tol > 0.0)) throw DomainError("solve_min: tol must be positive");

  CircleSolution sol;
  if (Delta == 0.0) {
    sol.curve = FourierCurve(N);
    return sol;
  }

  const Quadratics q(N);
  const double target = 2.0 * kPi * Delta * Delta;
  const double e_min = 6.0 * kPi * Delta * Delta;

  const optim::Objective obj = [&q](std::span<const double> x, std::span<double> g) {
    double v = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      v += q.e[i] * x[i] * x[i];
      g[i] = 2.0 * q.e[i] * x[i];
    }
    return v;
  };
  const optim::Objective con = [&q, target](std::span<const double> x, std::span<double> g) {
    double v = -target;
    for (size_t i = 0; i < x.size(); ++i) {
      v += q.c[i] * x[i] * x[i];
      g[i] = 2.0 * q.c[i] * x[i];
    }
    return v;
  };

  // Random starts until the verified tolerances hold; each retry reseeds
  // deterministically.  An explicit init gets a single attempt.
  const int max_attempts = init.has_value() ? 1 : 8;
  std::string failure = "solve_min: no attempt run";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> x0;
    if (init.has_value()) {
      init->validate();
      if (init->order() != N) throw DimensionError("solve_min: init order differs from N");
      x0 = to_vector(*init);
    } else {
      std::mt19937_64 rng(settings.seed + 0x9e3779b97f4a7c15ull * attempt);
      x0.resize(2 * N + 1);
      for (auto& xi : x0) xi = Delta * canonical(rng);
      // close the constraint exactly by scaling the modes n >= 2 (the only
      // ones with positive weight)
      double pos = 0.0;
      for (int n = 2; n <= N; ++n)
        pos += q.c[n] * (x0[n] * x0[n] + x0[N + n] * x0[N + n]);
      if (pos <= 0.0) {  // degenerate draw, put mass on mode 2
        x0[2] = Delta;
        pos = q.c[2] * Delta * Delta;
      }
      const double need = target + 2.0 * kPi * x0[0] * x0[0];
      const double scale = std::sqrt(need / pos);
      for (int n = 2; n <= N; ++n) {
        x0[n] *= scale;
        x0[N + n] *= scale;
      }
    }

    optim::OptimSettings s = settings;
    s.constraint_tol = std::min(settings.constraint_tol, 0.5 * tol * target);
    s.grad_tol = std::min(settings.grad_tol, 1e-10 * std::max(1.0, e_min));

    optim::ConstrainedResult r;
    try {
      // quasi-Newton inner: the mode weights span four decades, plain descent
      // crawls on that conditioning
      r = optim::augmented_lagrangian(obj, con, std::move(x0), s, true);
    } catch (const ConvergenceError&) {
      failure = "solve_min: augmented Lagrangian did not converge";
      continue;
    }

    FourierCurve curve = to_curve(r.x, N);
    const double e = energy(curve);
    const double resid = std::abs(constraint_value(curve) - target);
    const double outside = mass_outside_12(curve);
    if (std::abs(e - e_min) <= tol * e_min && outside <= tol && resid <= tol * target) {
      sol.curve = std::move(curve);
      sol.energy = e;
      sol.constraint_residual = resid;
      sol.multiplier = r.multiplier;
      sol.outer_iterations = r.outer_iterations;
      return sol;
    }
    failure = "solve_min: verified tolerances not met";
    if (init.has_value()) {
      // explicit init: report rather than silently rerandomising
      throw ConvergenceError(failure, to_vector(curve), resid);
    }
  }
  throw ConvergenceError(failure, {}, 0.0);
}

}  // namespace fvk::circle
