#pragma once

#include "fvk/errors.hpp"

namespace fvk {

// Energy of a configuration split by physical origin.  For the radial cap
// problem membrane_u is the u^2/r term and membrane_stretch the
// r (u' + w'^2 - 4 r^2)^2 term; for polar plate energies all membrane content
// is reported in membrane_stretch.  bend carries the h^2 weighted bending
// terms.  All three parts are quadratures of squares, hence nonnegative, and
// total is their sum.
struct EnergyBreakdown {
  double membrane_u = 0.0;
  double membrane_stretch = 0.0;
  double bend = 0.0;
  double total = 0.0;

  static EnergyBreakdown make(double mu, double ms, double b) {
    return {mu, ms, b, mu + ms + b};
  }
};

// Shared model parameters: h is the dimensionless thickness, delta the
// indentation depth, Delta the cone deficit amplitude.
struct ModelParams {
  double h = 0.1;
  double delta = 0.0;
  double Delta = 1.0;

  // h in (0, 1/2], delta in [0, 1], Delta > 0
  void validate() const {
    if (!(h > 0.0) || !(h <= 0.5)) throw DomainError("ModelParams: h must lie in (0, 1/2]");
    if (!(delta >= 0.0) || !(delta <= 1.0))
      throw DomainError("ModelParams: delta must lie in [0, 1]");
    if (!(Delta > 0.0)) throw DomainError("ModelParams: Delta must be positive");
  }
};

}  // namespace fvk
