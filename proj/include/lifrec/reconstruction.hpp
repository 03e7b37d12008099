#pragma once

#include <cstdint>
#include <vector>

#include "lifrec/samplers.hpp"

namespace lifrec {

//! Trapezoid-spectrum synthesis window. The spectrum equals 1 on
//! [-omega, omega], falls linearly to 0 at +-omega_stop, and vanishes
//! outside, which gives the closed form
//!   psi(t) = (omega_stop + omega) sinc((omega_stop+omega) t)
//!                                 sinc((omega_stop-omega) t).
struct WindowSpec {
  double omega = 1.0;       // passband edge
  double omega_stop = 2.0;  // stopband edge, omega < omega_stop <= 1/T - omega
  double T = 0.25;          // synthesis grid period, 0 < T < 1/(2 omega)
  double alpha = 0.0;       // leak rate of the sampler this window serves
};

//! min(1/T - omega, 2 omega): keeps the spectral copies at spacing 1/T
//! outside the window support.
double default_omega_stop(double omega, double T);
void validate(const WindowSpec& w);

double psi(double t, const WindowSpec& w);
//! phi(t) = psi'(t) + alpha psi(t); in the spectrum this multiplies the
//! window by (2 pi i w + alpha), which undoes the leaky averaging.
double phi(double t, const WindowSpec& w);

//! Coefficients a_n ~ leaky running average at grid times t_center + n T,
//! n in [-r, r].
struct CoefficientSeries {
  ArrayXd a;           // a_n at flat index n + r
  double T = 0.0;
  Index r = 0;
  double t_center = 0.0;
  std::vector<std::uint8_t> extrapolated;  // grid point outside the event span

  double value(Index n) const { return a[n + r]; }
  double time_of(Index n) const {
    return t_center + static_cast<double>(n) * T;
  }
};

//! Event-only estimate of the leaky running average on the synthesis grid:
//! a cumulative +-theta sum decayed between events, then decayed from the
//! last event to the grid point. Whenever the faded average stayed within
//! theta before the observation began, |a_n - F(nT)| <= 2 theta.
//! Grid points outside [t0, last event] are extrapolated by decay alone and
//! flagged.
CoefficientSeries estimate_coefficients(const EventSequence& eta,
                                        const WindowSpec& w, Index r,
                                        double t_center);

CoefficientSeries truncate(const CoefficientSeries& c, Index r);

//! T * sum_n a_n phi(t - t_n)  (the grid period scales the synthesis so the
//! unit-plateau window reproduces the signal).
double synth_value(const CoefficientSeries& c, const WindowSpec& w, double t);
SignalFn make_synth_fn(const CoefficientSeries& c, const WindowSpec& w);
SampledGrid reconstruct(const CoefficientSeries& c, const WindowSpec& w,
                        const GridSpec& g);

}  // namespace lifrec
