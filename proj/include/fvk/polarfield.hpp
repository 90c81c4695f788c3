#pragma once

#include <vector>

#include "fvk/grid.hpp"

namespace fvk {

// Scalar field sampled on a PolarGrid, row major in the radial index:
// value(i, j) = data[i * nt + j].
struct PolarField {
  int nr = 0;
  int nt = 0;
  std::vector<double> data;

  PolarField() = default;
  PolarField(int nr_, int nt_) : nr(nr_), nt(nt_), data(static_cast<size_t>(nr_) * nt_, 0.0) {}

  double& at(int i, int j) { return data[static_cast<size_t>(i) * nt + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * nt + j]; }
};

}  // namespace fvk
