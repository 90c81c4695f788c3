#pragma once

#include <vector>

namespace fvk {

// Real trigonometric polynomial on the unit circle,
//   alpha(t) = a0 + sum_{n=1..N} a[n-1] cos(n t) + b[n-1] sin(n t).
// Derivatives and products are computed on the coefficients, so they are
// exact (no sampling, no aliasing).
struct FourierCurve {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  FourierCurve() = default;
  explicit FourierCurve(int order) : a(order, 0.0), b(order, 0.0) {}

  int order() const { return static_cast<int>(a.size()); }
  void validate() const;  // len(a) == len(b), order >= 2

  double evaluate(double t) const;
  std::vector<double> sample(const std::vector<double>& ts) const;

  // Termwise derivative; the constant drops out.
  FourierCurve derivative() const;

  // Termwise antiderivative of the oscillatory part, constant chosen so the
  // mean vanishes.  The caller is responsible for the input mean being zero
  // (a nonzero a0 has no periodic antiderivative and is ignored).
  FourierCurve antiderivative_mean_zero() const;

  // Exact product via coefficient convolution; the order is the sum of the
  // factor orders.
  static FourierCurve product(const FourierCurve& f, const FourierCurve& g);

  double mean() const { return a0; }

  // Mass of the coefficient vector per mode: a0^2 for n = 0, a_n^2 + b_n^2
  // otherwise.  Used for spectral concentration checks.
  double mode_mass(int n) const;
  double total_mass() const;
};

}  // namespace fvk
