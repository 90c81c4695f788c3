#pragma once

#include <utility>
#include <vector>

#include "fvk/fourier.hpp"
#include "fvk/grid.hpp"
#include "fvk/polarfield.hpp"
#include "fvk/types.hpp"

namespace fvk::econe {

// Radial truncation profile: identically 0 below s = 1/2, the identity above
// s = 1, and the unique quintic C^2 blend in between.
double truncation_eta(double s);

// Configuration of a truncated single developable cone test field.  alpha
// must satisfy the excess length constraint for the given Delta to 1e-8
// relative, otherwise the tangential displacement has no periodic primitive.
struct EConeConfig {
  FourierCurve alpha;
  double Delta = 1.0;
  double h = 0.1;

  void validate() const;
};

struct EConeFields {
  PolarField u_r;    // radial in-plane displacement
  PolarField u_phi;  // tangential in-plane displacement
  PolarField w;      // out of plane deflection
};

// Truncated construction
//   w = h eta(r/h) alpha(t),
//   u_r = h eta(r/h) u(t),        u = -alpha^2/2,
//   u_phi = h eta(r/h) v(t),      v' = (Delta^2 + alpha^2 - alpha'^2)/2,
// with v the mean zero primitive, computed on the Fourier coefficients.
// Requires at least 8 radial cells below r = h.
EConeFields build_truncated_pair(const EConeConfig& config, const PolarGrid& grid);

// Degree one homogeneous version of the same fields, w = r alpha(t) etc.,
// with no truncation.  Used for annulus energies and curvature checks.
EConeFields build_homogeneous_pair(const FourierCurve& alpha, double Delta,
                                   const PolarGrid& grid);

// Plate energy of the displacement pair over the annulus of grid radii in
// [r_lo, r_hi]: membrane integrand
//   |2 sym Du + grad w x grad w - Delta^2 e_phi x e_phi|^2
// in polar components plus h^2 |Hess w|^2 bending, both with the r dr dphi
// area element.  Radial derivatives use the one dimensional stencils, angular
// derivatives periodic central differences.
EnergyBreakdown fvk_energy_polar(const EConeFields& fields, double Delta,
                                 double h, const PolarGrid& grid,
                                 double r_lo = 0.0, double r_hi = 1.0);

// Integral of det D^2 w over the disk of radius r, evaluated as the boundary
// circulation (1/2) * integral over the circle of
//   w_r^2 - (w_phi / r)^2 + d/dphi (w_r w_phi) / r.
// r must be one of the grid radii, away from the ends so the radial stencil
// is central.  A cone of deficit Delta gives the constant -pi Delta^2 outside
// the tip region.
double gauss_curvature(const PolarField& w, double r, const PolarGrid& grid);

// Least squares fit of E/h^2 = C1 log(1/h) + C2 on (h, E) samples.  Needs at
// least 4 samples with max(h)/min(h) >= 32.
struct LogFit {
  double C1 = 0.0;
  double C2 = 0.0;
  double max_rel_residual = 0.0;
};
LogFit fit_log_coefficient(const std::vector<std::pair<double, double>>& samples);

}  // namespace fvk::econe
