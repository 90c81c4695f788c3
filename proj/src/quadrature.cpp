#include "fvk/quadrature.hpp"

#include "fvk/errors.hpp"

namespace fvk {

double integrate(std::span<const double> values, const RadialGrid& grid) {
  if (static_cast<int>(values.size()) != grid.n())
    throw DimensionError("integrate: values length does not match grid");
  double acc = 0.0;
  for (int i = 0; i + 1 < grid.n(); ++i)
    acc += 0.5 * (grid.r[i + 1] - grid.r[i]) * (values[i] + values[i + 1]);
  return acc;
}

double integrate_window(std::span<const double> values, const RadialGrid& grid,
                        double r_lo, double r_hi) {
  if (static_cast<int>(values.size()) != grid.n())
    throw DimensionError("integrate_window: values length does not match grid");
  if (!(r_lo < r_hi)) throw DomainError("integrate_window: empty window");
  double acc = 0.0;
  for (int i = 0; i + 1 < grid.n(); ++i) {
    if (grid.r[i] >= r_lo - 1e-15 && grid.r[i + 1] <= r_hi + 1e-15)
      acc += 0.5 * (grid.r[i + 1] - grid.r[i]) * (values[i] + values[i + 1]);
  }
  return acc;
}

std::vector<double> cumtrapz(std::span<const double> values,
                             std::span<const double> x) {
  if (values.size() != x.size())
    throw DimensionError("cumtrapz: values and abscissae differ in length");
  std::vector<double> out(values.size(), 0.0);
  for (size_t i = 1; i < values.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (values[i] + values[i - 1]);
  return out;
}

}  // namespace fvk
