#pragma once

#include <string>
#include <vector>

namespace fvk::fitting {

// One observation row for scaling fits.  delta or Delta may be unused
// depending on the model.
struct Sample {
  double h = 0.0;
  double delta = 0.0;
  double value = 0.0;
};

// Supported models:
//   "A*h^p"                      log-log least squares in h
//   "A*delta^q"                  log-log least squares in delta
//   "A*h^p*delta^q"              joint log-log least squares
//   "C1*h^2*log(1/h)+C2*h^2"     linear fit of value/h^2 against log(1/h)
struct ScalingFit {
  std::string model;
  double A = 0.0;   // prefactor, or C1 for the log model
  double p = 0.0;   // h exponent, or C2 for the log model
  double q = 0.0;   // delta exponent when present
  double max_rel_residual = 0.0;
};

// Fit the named model.  Positive values required for every sample entering a
// logarithm.  A predictor with no spread across samples makes the problem
// rank deficient; that raises FitError naming the flat direction.
ScalingFit fit_scaling(const std::vector<Sample>& samples, const std::string& model);

}  // namespace fvk::fitting
