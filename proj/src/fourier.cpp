#include "fvk/fourier.hpp"

#include <cmath>
#include <complex>

#include "fvk/errors.hpp"

namespace fvk {

void FourierCurve::validate() const {
  if (a.size() != b.size())
    throw DimensionError("FourierCurve: cosine and sine arrays differ in length");
  if (order() < 2) throw DomainError("FourierCurve: order must be at least 2");
}

double FourierCurve::evaluate(double t) const {
  double s = a0;
  for (int n = 1; n <= order(); ++n)
    s += a[n - 1] * std::cos(n * t) + b[n - 1] * std::sin(n * t);
  return s;
}

std::vector<double> FourierCurve::sample(const std::vector<double>& ts) const {
  std::vector<double> out(ts.size());
  for (size_t k = 0; k < ts.size(); ++k) out[k] = evaluate(ts[k]);
  return out;
}

FourierCurve FourierCurve::derivative() const {
  FourierCurve d(order());
  for (int n = 1; n <= order(); ++n) {
    d.a[n - 1] = n * b[n - 1];
    d.b[n - 1] = -n * a[n - 1];
  }
  return d;
}

FourierCurve FourierCurve::antiderivative_mean_zero() const {
  FourierCurve p(order());
  for (int n = 1; n <= order(); ++n) {
    p.a[n - 1] = -b[n - 1] / n;
    p.b[n - 1] = a[n - 1] / n;
  }
  return p;
}

FourierCurve FourierCurve::product(const FourierCurve& f, const FourierCurve& g) {
  const int N1 = f.order(), N2 = g.order(), N = N1 + N2;
  using cd = std::complex<double>;
  // exponential coefficients, index shifted by the order
  std::vector<cd> cf(2 * N1 + 1), cg(2 * N2 + 1), ce(2 * N + 1, cd(0.0, 0.0));
  cf[N1] = f.a0;
  for (int n = 1; n <= N1; ++n) {
    cf[N1 + n] = cd(f.a[n - 1] / 2.0, -f.b[n - 1] / 2.0);
    cf[N1 - n] = std::conj(cf[N1 + n]);
  }
  cg[N2] = g.a0;
  for (int n = 1; n <= N2; ++n) {
    cg[N2 + n] = cd(g.a[n - 1] / 2.0, -g.b[n - 1] / 2.0);
    cg[N2 - n] = std::conj(cg[N2 + n]);
  }
  for (int i = -N1; i <= N1; ++i)
    for (int j = -N2; j <= N2; ++j)
      ce[N + i + j] += cf[N1 + i] * cg[N2 + j];

  FourierCurve out(N);
  out.a0 = ce[N].real();
  for (int n = 1; n <= N; ++n) {
    out.a[n - 1] = 2.0 * ce[N + n].real();
    out.b[n - 1] = -2.0 * ce[N + n].imag();
  }
  return out;
}

double FourierCurve::mode_mass(int n) const {
  if (n < 0 || n > order()) throw DomainError("FourierCurve::mode_mass: mode out of range");
  if (n == 0) return a0 * a0;
  return a[n - 1] * a[n - 1] + b[n - 1] * b[n - 1];
}

double FourierCurve::total_mass() const {
  double m = a0 * a0;
  for (int n = 1; n <= order(); ++n) m += mode_mass(n);
  return m;
}

}  // namespace fvk
