#include "lifrec/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lifrec/errors.hpp"

namespace lifrec {

namespace {

constexpr std::array<double, 5> kNode = {
    -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
    0.9061798459386640};
constexpr std::array<double, 5> kWeight = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

// Single panel of ∫_a^b f(s) e^{alpha (s - b)} ds.
double panel(const SignalFn& f, double a, double b, double alpha) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double s = mid + half * kNode[i];
    const double v = f(s);
    if (!std::isfinite(v)) {
      throw NumericalError("non-finite signal value at t = " +
                           std::to_string(s));
    }
    acc += kWeight[i] * v * std::exp(alpha * (s - b));
  }
  return half * acc;
}

}  // namespace

double leaky_integral(const SignalFn& f, double a, double b, double alpha,
                      double max_panel) {
  if (!(max_panel > 0.0)) throw ParameterError("max_panel must be positive");
  if (b <= a) return 0.0;
  const double len = b - a;
  const long n = static_cast<long>(std::ceil(len / max_panel));
  const double w = len / static_cast<double>(n);
  double acc = 0.0;
  for (long p = 0; p < n; ++p) {
    const double pa = a + w * static_cast<double>(p);
    const double pb = (p + 1 == n) ? b : a + w * static_cast<double>(p + 1);
    acc = std::exp(-alpha * (pb - pa)) * acc + panel(f, pa, pb, alpha);
  }
  return acc;
}

double integral(const SignalFn& f, double a, double b, double max_panel) {
  return leaky_integral(f, a, b, 0.0, max_panel);
}

}  // namespace lifrec
