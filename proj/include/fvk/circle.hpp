#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fvk/fourier.hpp"
#include "fvk/optim.hpp"

namespace fvk::circle {

// Bending functional of a circle profile, integral over [0, 2*pi] of
// (alpha + alpha'')^2.  Evaluated in closed form on the coefficients:
//   2*pi a0^2 + pi sum_n (1 - n^2)^2 (a_n^2 + b_n^2).
double energy(const FourierCurve& alpha);

// Excess length functional, integral of (alpha'^2 - alpha^2):
//   pi sum_n (n^2 - 1)(a_n^2 + b_n^2) - 2*pi a0^2.
double constraint_value(const FourierCurve& alpha);

// Energy of the pure mode-n stationary curves normalised to excess 2*pi
// Delta^2: E_n = 2*pi Delta^2 (n^2 - 1) for n >= 2.  Increasing in n, so the
// n = 2 entry, 6*pi Delta^2, is the global minimum.
std::vector<std::pair<int, double>> mode_energy_table(double Delta, int n_max);

// L2 norm of the Euler-Lagrange residual
//   alpha'''' + (2 + lambda) alpha'' + (1 + lambda) alpha
// for a given multiplier lambda.  Mode n contributes the factor
// n^4 - (2 + lambda) n^2 + (1 + lambda) on its amplitudes.
double el_residual(const FourierCurve& alpha, double lambda);

// Coefficient mass outside the mode set {1, 2}, relative to the total mass.
double mass_outside_12(const FourierCurve& alpha);

struct CircleSolution {
  FourierCurve curve;
  double energy = 0.0;
  double constraint_residual = 0.0;
  double multiplier = 0.0;
  int outer_iterations = 0;
};

// Minimise the bending functional subject to constraint_value = 2*pi Delta^2
// over trigonometric polynomials of order N, by an augmented Lagrangian loop
// over the coefficients.  Random initial coefficients (scaled so the
// constraint holds exactly) unless an explicit init is supplied.  Delta = 0
// returns the zero curve.  Throws ConvergenceError when the verified
// tolerances (energy, spectral concentration, feasibility) are not met.
CircleSolution solve_min(double Delta, int N, double tol,
                         const optim::OptimSettings& settings = {},
                         std::optional<FourierCurve> init = std::nullopt);

}  // namespace fvk::circle
