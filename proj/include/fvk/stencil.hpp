#pragma once

#include <span>
#include <vector>

#include "fvk/grid.hpp"

namespace fvk {

// Finite difference first derivative on a uniform grid.  Central second order
// stencil in the interior, one sided second order stencils at both ends.
// Exact on quadratics everywhere.
std::vector<double> d1(std::span<const double> f, const RadialGrid& grid);

// Second derivative, same accuracy structure.  At n = 3 the unique parabola
// through the three nodes supplies the value at every node.
std::vector<double> d2(std::span<const double> f, const RadialGrid& grid);

// Transpose applications, used to assemble exact gradients of discrete
// energies: (d1_adjoint(c))_j = sum_i c_i (D1)_{ij}.
std::vector<double> d1_adjoint(std::span<const double> c, const RadialGrid& grid);
std::vector<double> d2_adjoint(std::span<const double> c, const RadialGrid& grid);

}  // namespace fvk
