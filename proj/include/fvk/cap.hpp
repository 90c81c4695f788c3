#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "fvk/grid.hpp"
#include "fvk/optim.hpp"
#include "fvk/types.hpp"

namespace fvk::cap {

// Radially symmetric configuration of the indented cap: in-plane displacement
// u and deflection w sampled on a shared radial grid.
struct CapProfile {
  RadialGrid grid;
  std::vector<double> u;
  std::vector<double> w;

  void validate_shape() const;
};

// Boundary behaviour of a profile against the admissible set for a given
// indentation depth: w(0) = 0, u(0) = 0 (extrapolated, since r = 0 is not a
// node) and w(1) = 1 - delta.
struct AdmissibilityReport {
  double w_zero_linear = 0.0;     // linear extrapolation of w to r = 0
  double w_zero_quadratic = 0.0;  // three node extrapolation, exact on parabolas
  double u_zero_linear = 0.0;
  double w_boundary_error = 0.0;  // w(1) - (1 - delta)
};
AdmissibilityReport admissibility(const CapProfile& p, double delta);

// Scaled energy
//   E_h = int_0^1 [ u^2/r + r (u' + w'^2 - 4 r^2)^2 + h^2 ( r w''^2 + w'^2/r ) ] dr
// evaluated with the module stencils and trapezoid quadrature on the cell
// centered grid (the excluded [0, r_0) mass is O(spacing^2) for admissible
// profiles).
EnergyBreakdown cap_energy(const CapProfile& p, double h);

// Exact gradient of the discrete energy with respect to the node values,
// assembled with the transposed difference stencils.  The Dirichlet value
// w(1) is held fixed, so dw.back() is reported as zero; all other entries are
// plain partial derivatives.
struct CapGradient {
  std::vector<double> du;
  std::vector<double> dw;
};
CapGradient cap_gradient(const CapProfile& p, double h);

// Inversion radius and connector half width for the indented construction.
// For delta >= h: R = sqrt((delta - h/2)/2), l = sqrt(h)/2; for delta < h
// both shrink proportionally to sqrt(delta).  The construction needs
// 2 l < R; pairs violating that are flagged infeasible rather than rejected.
struct RlChoice {
  double R = 0.0;
  double l = 0.0;
  bool feasible = false;
};
RlChoice choose_Rl(double h, double delta);

// Slope profile of the connector bridging w' = -2r to w' = +2r across
// [R - l, R + l].  In the stretched variable x = (r - R)/l the slope is the
// cubic  p(x) = c0 + c1 x + c2 x^2 + c3 x^3  fixed by
//   p(-1) = -2(R - l),  p(+1) = 2(R + l),  int_{-1}^{1} p = 0,
// with the remaining parameter root-found so the net stretch over the
// connector vanishes: int (4 r^2 - p((r-R)/l)^2) dr = 0.
struct ConnectorSpec {
  double R = 0.0;
  double l = 0.0;
  std::array<double, 4> c{};  // slope coefficients in x

  double slope(double x) const;       // p(x)
  double height(double x) const;      // int_{-1}^{x} p, zero at both ends
  double stretch_primitive(double x) const;  // int_{-1}^{x} p^2
  double sm1_left() const;            // p(-1) + 2(R - l)
  double sm1_right() const;           // p(+1) - 2(R + l)
  double height_closure() const;      // height(+1)
  double sm2_residual() const;        // int over the connector of 4r^2 - p^2
};
ConnectorSpec build_connector(double R, double l);

// Spherical inversion test profile: w' = -2r inside the inversion radius,
// the connector slope across [R - l, R + l], +2r outside; u' balances the
// stretch on the connector and vanishes elsewhere.  Sampled from the exact
// piecewise primitives.  delta = 0 degenerates to the undeflected cap w = r^2,
// u = 0.  Throws ConstructionError for infeasible (h, delta).
CapProfile build_inversion(double h, double delta, const RadialGrid& grid);

struct MinimizeResult {
  CapProfile profile;
  EnergyBreakdown energy;
  int iterations = 0;
  bool budget_exhausted = false;
  double grad_sup_norm = 0.0;
  double initial_energy = 0.0;
};

// Descend the discrete energy from an admissible initial profile.  The
// Dirichlet value w(1) = 1 - delta stays pinned and the r -> 0 conditions are
// kept as exact linear ties between the first two nodes of u and of w.
// Monotone in energy; exhausting the iteration budget sets a flag instead of
// failing.
MinimizeResult minimize_cap(double h, double delta, const CapProfile& init,
                            double grad_tol,
                            const optim::OptimSettings& settings = {});

// Largest grid radius at which the slope w' sits outside the open two-well
// set (3r/2, 5r/2) u (-5r/2, -3r/2); zero when every node is inside.
double tau(const CapProfile& p);

// Net stretch primitive on the doubling interval I_a = [a, 2a]:
//   g_a(r) = int_a^r (4 t^2 - w'^2) dt + c_a,  mean zero on I_a,
// with its L2(I_a) norm.  Needs at least 16 nodes in the interval.
struct GaProfile {
  std::vector<double> r;
  std::vector<double> values;
  double l2_norm = 0.0;
};
GaProfile g_a_profile(const CapProfile& p, double a);

// Dimensionless ratios probing the optimality of a profile's energy: each
// compares a quantity the energy is known to dominate against the energy
// itself.  Thresholds live in the tests; this just reports numbers.
struct LowerBoundReport {
  double energy = 0.0;
  double tau_value = 0.0;
  double interp_left = 0.0;   // min(tau^6, tau^3 h^{3/2})
  double interp_ratio = 0.0;  // interp_left / energy
  double thickness_ratio = 0.0;  // h^2 / energy
  double slope_l1 = 0.0;      // int_0^s |w'|, s = 1/2
  double slope_l1_bound = 0.0;   // (s/h) sqrt(energy)
  double slope_l1_ratio = 0.0;
  double ga_a = 0.0;          // a used for the g_a probe
  double ga_norm = 0.0;
  double ga_ratio = 0.0;      // ga_norm / (sqrt(a) sqrt(energy))
};
LowerBoundReport lower_bound_report(const CapProfile& p, double h, double delta);

// Degree of freedom map used by minimize_cap and the gradient tests: packs
// (u, w) into the free vector [u_1..u_{n-1}, w_1..w_{n-2}] and unpacks with
// u_0 = u_1/3, w_0 = w_1/3 (linear extrapolation through r = 0 on the cell
// centered grid) and w_{n-1} = 1 - delta.
struct CapDofMap {
  int n = 0;
  double delta = 0.0;

  int dim() const { return 2 * n - 3; }
  std::vector<double> pack(const CapProfile& p) const;
  void unpack(std::span<const double> x, CapProfile& p) const;
  std::vector<double> fold_gradient(const CapGradient& g) const;
};

}  // namespace fvk::cap
