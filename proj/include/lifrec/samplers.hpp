#pragma once

#include <vector>

#include "lifrec/signal.hpp"

namespace lifrec {

//! Time-ordered threshold events (t_k, v_k) with |v_k| = theta.
//!
//! The sampling start time t0 carries the paper-level convention of a
//! zero-valued virtual event at the start of the observation; it is not
//! stored as an event entry.
struct EventSequence {
  ArrayXd times;
  ArrayXd values;
  double theta = 0.0;
  double alpha = 0.0;
  double t0 = 0.0;
  std::vector<Index> grazing;  // indices of tangential (numerically fragile) crossings

  Index size() const { return times.size(); }
};

struct SamplerConfig {
  double theta = 0.01;
  double alpha = 0.0;
  double t_begin = 0.0;
  double t_end = 0.0;
  double step = 0.0;           // integration/check step; must be > 0
  double crossing_tol = 1e-10; // time tolerance of the crossing bisection
};

//! min(1/(32 omega), 0.1/max(alpha, 1))
double default_step(double omega, double alpha);

//! Leaky integrate-and-fire: emits +-theta whenever the exponentially faded
//! integral of f since the previous event first reaches +-theta, then
//! restarts the integral at the crossing.
EventSequence lif_sample(const SignalFn& f, const SamplerConfig& cfg);

//! Send-on-delta: emits +-theta whenever g deviates by theta from its value
//! at the previous event. Equivalent to LIF with alpha = 0 applied to the
//! antiderivative of the input; alpha is recorded as 0.
EventSequence sod_sample(const SignalFn& g, double theta, double t_begin,
                         double t_end, double step, double crossing_tol);

//! Events with lo <= t <= hi; the result's t0 becomes lo.
EventSequence restrict_to(const EventSequence& eta, double lo, double hi);

}  // namespace lifrec
