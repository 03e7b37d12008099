#pragma once

#include <functional>

namespace lifrec {

using SignalFn = std::function<double(double)>;

// ∫_a^b f(s) e^{alpha (s - b)} ds by composite 5-point Gauss-Legendre with
// panel width <= max_panel. All exponents in the accumulation are <= 0, so
// the value stays finite for arbitrarily large alpha * (b - a).
double leaky_integral(const SignalFn& f, double a, double b, double alpha,
                      double max_panel);

// Plain ∫_a^b f(s) ds (alpha = 0 case of the above).
double integral(const SignalFn& f, double a, double b, double max_panel);

}  // namespace lifrec
