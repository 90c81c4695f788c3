#include "fvk/stencil.hpp"

#include "fvk/errors.hpp"

namespace fvk {

namespace {

void require_uniform(std::span<const double> f, const RadialGrid& grid,
                     const char* who, int min_nodes) {
  if (static_cast<int>(f.size()) != grid.n())
    throw DimensionError(std::string(who) + ": values length does not match grid");
  if (grid.n() < min_nodes)
    throw DimensionError(std::string(who) + ": grid too short");
  if (!grid.is_uniform())
    throw PreconditionError(std::string(who) + ": grid must be uniform");
}

}  // namespace

std::vector<double> d1(std::span<const double> f, const RadialGrid& grid) {
  require_uniform(f, grid, "d1", 3);
  const int n = grid.n();
  const double h = (grid.r.back() - grid.r.front()) / (n - 1);
  std::vector<double> out(n);
  out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return out;
}

std::vector<double> d2(std::span<const double> f, const RadialGrid& grid) {
  require_uniform(f, grid, "d2", 3);
  const int n = grid.n();
  const double h = (grid.r.back() - grid.r.front()) / (n - 1);
  const double h2 = h * h;
  std::vector<double> out(n);
  for (int i = 1; i + 1 < n; ++i)
    out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / h2;
  if (n == 3) {
    // single parabola through the three nodes
    out[0] = out[2] = out[1];
    return out;
  }
  out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  return out;
}

std::vector<double> d1_adjoint(std::span<const double> c, const RadialGrid& grid) {
  require_uniform(c, grid, "d1_adjoint", 3);
  const int n = grid.n();
  const double h = (grid.r.back() - grid.r.front()) / (n - 1);
  const double ih2 = 1.0 / (2.0 * h);
  std::vector<double> out(n, 0.0);
  out[0] += -3.0 * ih2 * c[0];
  out[1] += 4.0 * ih2 * c[0];
  out[2] += -ih2 * c[0];
  for (int i = 1; i + 1 < n; ++i) {
    out[i - 1] += -ih2 * c[i];
    out[i + 1] += ih2 * c[i];
  }
  out[n - 1] += 3.0 * ih2 * c[n - 1];
  out[n - 2] += -4.0 * ih2 * c[n - 1];
  out[n - 3] += ih2 * c[n - 1];
  return out;
}

std::vector<double> d2_adjoint(std::span<const double> c, const RadialGrid& grid) {
  require_uniform(c, grid, "d2_adjoint", 3);
  const int n = grid.n();
  const double h = (grid.r.back() - grid.r.front()) / (n - 1);
  const double ih2 = 1.0 / (h * h);
  std::vector<double> out(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    out[i - 1] += ih2 * c[i];
    out[i] += -2.0 * ih2 * c[i];
    out[i + 1] += ih2 * c[i];
  }
  if (n == 3) {
    // mirror of the n = 3 fallback in d2
    for (int j = 0; j < 3; ++j) {
      const double w = (j == 1) ? -2.0 : 1.0;
      out[j] += w * ih2 * (c[0] + c[2]);
    }
    return out;
  }
  out[0] += 2.0 * ih2 * c[0];
  out[1] += -5.0 * ih2 * c[0];
  out[2] += 4.0 * ih2 * c[0];
  out[3] += -ih2 * c[0];
  out[n - 1] += 2.0 * ih2 * c[n - 1];
  out[n - 2] += -5.0 * ih2 * c[n - 1];
  out[n - 3] += 4.0 * ih2 * c[n - 1];
  out[n - 4] += -ih2 * c[n - 1];
  return out;
}

}  // namespace fvk
