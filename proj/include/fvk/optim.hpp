#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fvk::optim {

struct OptimSettings {
  int max_outer = 60;        // outer multiplier updates (constrained solves)
  int max_inner = 20000;     // descent iterations per inner solve
  double grad_tol = 1e-9;    // sup norm termination for the gradient
  double constraint_tol = 1e-10;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  double penalty_init = 10.0;
  double penalty_growth = 2.0;
  unsigned long long seed = 1;

  void validate() const;
};

// Objective evaluates f(x) and writes the gradient into grad (same length as
// x).  Both descend and the constrained driver call it with preallocated
// buffers, so implementations should not allocate.
using Objective =
    std::function<double(std::span<const double> x, std::span<double> grad)>;

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> trace;  // objective value per accepted iterate, f0 first
  int iterations = 0;
  bool converged = false;
  double grad_sup_norm = 0.0;
};

// Gradient descent with Armijo backtracking.  The trace is non increasing by
// construction.  Terminates when the gradient sup norm drops below grad_tol,
// the iteration budget runs out, or the line search cannot make progress.
DescentResult descend(const Objective& objective, std::vector<double> init,
                      const OptimSettings& settings);

// Limited memory quasi-Newton descent with the same monotonicity and
// termination contract as descend.  Used where plain descent is too slow for
// stiff discrete energies.
DescentResult descend_lbfgs(const Objective& objective, std::vector<double> init,
                            const OptimSettings& settings, int memory = 12);

struct ConstrainedResult {
  std::vector<double> x;
  double value = 0.0;
  double multiplier = 0.0;
  double constraint_value = 0.0;
  int outer_iterations = 0;
  bool converged = false;
};

// Augmented Lagrangian loop for a single scalar equality constraint c(x) = 0.
// The multiplier starts from the least squares estimate at the initial point,
// so a point that already satisfies first order optimality is returned
// unchanged.  Multiplier update lambda += rho c(x); rho grows by
// penalty_growth whenever the residual shrank by less than half.  A penalty
// beyond 1e12 without feasibility raises ConvergenceError.
ConstrainedResult augmented_lagrangian(const Objective& objective,
                                       const Objective& constraint,
                                       std::vector<double> init,
                                       const OptimSettings& settings,
                                       bool quasi_newton_inner = false);

// Worst relative disagreement between the analytic gradient and a central
// finite difference with the given absolute step.
double gradient_check(const Objective& objective, std::span<const double> point,
                      double step);

}  // namespace fvk::optim
