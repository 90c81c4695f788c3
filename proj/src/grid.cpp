#include "fvk/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fvk/errors.hpp"

namespace fvk {

RadialGrid RadialGrid::uniform(int n) {
  if (n < 2) throw DomainError("RadialGrid::uniform: need at least 2 nodes");
  RadialGrid g;
  g.r.resize(n);
  const double denom = 2.0 * n - 1.0;
  for (int i = 0; i < n; ++i) g.r[i] = (2.0 * i + 1.0) / denom;
  g.spacing = 2.0 / denom;
  g.validate();
  return g;
}

RadialGrid RadialGrid::uniform_from(double r_first, int n) {
  if (n < 2) throw DomainError("RadialGrid::uniform_from: need at least 2 nodes");
  if (!(r_first > 0.0) || !(r_first < 1.0))
    throw DomainError("RadialGrid::uniform_from: first node must lie in (0, 1)");
  RadialGrid g;
  g.r.resize(n);
  const double step = (1.0 - r_first) / (n - 1);
  for (int i = 0; i < n; ++i) g.r[i] = r_first + step * i;
  g.r[n - 1] = 1.0;
  g.spacing = step;
  g.validate();
  return g;
}

bool RadialGrid::is_uniform(double rel_tol) const {
  if (n() < 2) return true;
  const double step = (r.back() - r.front()) / (n() - 1);
  for (int i = 1; i < n(); ++i) {
    if (std::abs((r[i] - r[i - 1]) - step) > rel_tol * std::max(1.0, std::abs(step)) * 8)
      return false;
  }
  return true;
}

void RadialGrid::validate() const {
  if (n() < 2) throw DomainError("RadialGrid: need at least 2 nodes");
  if (!(r.front() > 0.0)) throw DomainError("RadialGrid: first node must be positive");
  for (int i = 1; i < n(); ++i) {
    if (!(r[i] > r[i - 1])) throw DomainError("RadialGrid: radii must increase strictly");
  }
  if (std::abs(r.back() - 1.0) > 1e-12)
    throw DomainError("RadialGrid: last node must sit at r = 1, got " +
                      std::to_string(r.back()));
}

PolarGrid PolarGrid::make(int nr, int nt) {
  if (nr < 4) throw DomainError("PolarGrid: need at least 4 radial nodes");
  if (nt < 8) throw DomainError("PolarGrid: need at least 8 angular nodes");
  PolarGrid g;
  g.dr = 1.0 / nr;
  g.dt = 2.0 * std::numbers::pi / nt;
  g.r.resize(nr);
  g.t.resize(nt);
  for (int i = 0; i < nr; ++i) g.r[i] = (i + 1.0) / nr;
  for (int j = 0; j < nt; ++j) g.t[j] = g.dt * j;
  return g;
}

}  // namespace fvk
