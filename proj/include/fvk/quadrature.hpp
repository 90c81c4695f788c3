#pragma once

#include <span>
#include <vector>

#include "fvk/grid.hpp"

namespace fvk {

// Composite trapezoid rule over the grid nodes.  Exact for piecewise linear
// integrands; second order otherwise.
double integrate(std::span<const double> values, const RadialGrid& grid);

// Trapezoid rule restricted to nodes with r in [r_lo, r_hi].
double integrate_window(std::span<const double> values, const RadialGrid& grid,
                        double r_lo, double r_hi);

// Running trapezoid integral: out[0] = 0, out[k] = integral from x[0] to x[k].
std::vector<double> cumtrapz(std::span<const double> values,
                             std::span<const double> x);

}  // namespace fvk
