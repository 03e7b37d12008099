#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "lifrec/quadrature.hpp"

namespace lifrec {

using Eigen::ArrayXd;
using Eigen::Index;

double sinc(double x);        // sin(pi x) / (pi x), exactly 1 at x = 0
double sinc_deriv(double x);  // d/dx sinc(x)

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

//! Finite sum of shifted sinc atoms; exactly bandlimited to [-omega, omega].
//!
//! f(t) = sum_m amplitudes[m] * sinc(2 omega (t - centers[m]))
struct BandlimitedSignal {
  double omega = 1.0;  // bandwidth in Hz (cycles per time unit)
  ArrayXd centers;
  ArrayXd amplitudes;

  double operator()(double t) const;
  ArrayXd sample(const ArrayXd& t) const;
  SignalFn fn() const;
};

//! Atom centers uniform in time_window, amplitudes uniform in amp_range,
//! reproducible from the seed. Point ranges (lo == hi) are allowed and pin
//! the value; reversed ranges are an error.
BandlimitedSignal generate_random_bandlimited(double omega, int n_atoms,
                                              Interval amp_range,
                                              Interval time_window,
                                              std::uint64_t seed);

//! Values on the uniform grid t_i = t0 + i h.
struct SampledGrid {
  double t0 = 0.0;
  double h = 1.0;
  ArrayXd values;

  double time_at(Index i) const { return t0 + h * static_cast<double>(i); }
  Index size() const { return values.size(); }
};

struct GridSpec {
  double t0 = 0.0;
  double h = 1.0;
  Index count = 0;
};

GridSpec grid_over(double lo, double hi, double h);
ArrayXd grid_times(const GridSpec& g);
SampledGrid render(const SignalFn& f, const GridSpec& g);
SampledGrid render(const BandlimitedSignal& f, const GridSpec& g);

//! max_i |a_i - b_i|; the grids must carry identical t0, h and length.
double max_norm_distance(const SampledGrid& a, const SampledGrid& b);

// Exponentially faded running average, truncated at t_start:
//   ∫_{t_start}^t f(s) e^{alpha (s - t)} ds.
// Quadrature test oracle; max_panel bounds the composite panel width.
double reference_leaky_average(const SignalFn& f, double t, double alpha,
                               double t_start, double max_panel);
// Panel width defaults to 1 / (64 omega).
double reference_leaky_average(const BandlimitedSignal& f, double t,
                               double alpha, double t_start);

}  // namespace lifrec
