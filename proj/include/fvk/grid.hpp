#pragma once

#include <vector>

namespace fvk {

// One dimensional radial grid on (0, 1].  The first node is strictly positive
// so integrands carrying 1/r weights are always well defined; the last node
// sits at r = 1.
struct RadialGrid {
  std::vector<double> r;
  double spacing = 0.0;  // nominal step, meaningful for uniform grids

  int n() const { return static_cast<int>(r.size()); }

  // Cell centered uniform grid: r_i = (2i+1)/(2n-1), so r_0 = spacing/2 and
  // r_{n-1} = 1.  The interval [0, r_0) is left out of quadratures; for the
  // profiles used here its mass is O(spacing^2).
  static RadialGrid uniform(int n);

  // Uniform grid with an explicit first node, ending at 1.
  static RadialGrid uniform_from(double r_first, int n);

  bool is_uniform(double rel_tol = 1e-12) const;
  void validate() const;
};

// Tensor product polar grid on the unit disk minus the origin.  Radii are
// r_i = (i+1) dr with dr = 1/nr (so r = 1 is a node and dyadic radii are nodes
// whenever nr is the matching power of two); angles are t_j = j dt with
// dt = 2*pi/nt and periodic wraparound.
struct PolarGrid {
  std::vector<double> r;
  std::vector<double> t;
  double dr = 0.0;
  double dt = 0.0;

  int nr() const { return static_cast<int>(r.size()); }
  int nt() const { return static_cast<int>(t.size()); }

  static PolarGrid make(int nr, int nt);
};

}  // namespace fvk
