#pragma once

#include <cmath>

#include "lifrec/signal.hpp"

namespace lifrec {

//! Uniformly sampled function with Catmull-Rom cubic interpolation.
//! Queries outside the tabulated range clamp to the edge cell, so tables
//! should be built with margins covering every query.
struct UniformTable {
  double x0 = 0.0;
  double dx = 1.0;
  ArrayXd v;

  double operator()(double x) const {
    const double u = (x - x0) / dx;
    Index i = static_cast<Index>(std::floor(u));
    if (i < 1) i = 1;
    if (i > v.size() - 3) i = v.size() - 3;
    const double s = u - static_cast<double>(i);
    const double v0 = v[i - 1], v1 = v[i], v2 = v[i + 1], v3 = v[i + 2];
    return v1 + 0.5 * s *
                    (v2 - v0 +
                     s * (2.0 * v0 - 5.0 * v1 + 4.0 * v2 - v3 +
                          s * (3.0 * (v1 - v2) + v3 - v0)));
  }
};

UniformTable tabulate(const SignalFn& f, double x_lo, double x_hi, double dx);

}  // namespace lifrec
