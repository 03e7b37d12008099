#pragma once

#include "lifrec/samplers.hpp"

namespace lifrec {

//! How interval measures of two event sequences are anchored when compared.
//!
//! PerSequence: each sequence's measure decays towards its own last event
//! inside the interval (reference semantics, faithful to the event-measure
//! definition). Merged: both decay towards the last merged event (fast path;
//! coincides with PerSequence when alpha = 0 or the time stamps coincide).
enum class AnchorSemantics { PerSequence, Merged };

struct DiscrepancyResult {
  double value = 0.0;
  double left = 0.0;   // interval attaining the maximum
  double right = 0.0;
  AnchorSemantics semantics = AnchorSemantics::PerSequence;
  // Merged path only: largest lag between a sequence's own anchor and the
  // merged anchor inside the maximizing interval. The anchor mismatch of the
  // reported value is bounded by a factor e^{alpha * anchor_gap}.
  double anchor_gap = 0.0;
};

//! Faded concatenation of adjacent interval measures over (r,s] and (s,t]:
//! e^{alpha (s - t)} x + y. Associative.
double oplus(double x, double y, double alpha, double s, double t);

//! Weighted event sum over [lo, hi], anchored at the last event inside;
//! 0 when the interval contains no event (empty-sum convention).
double mu_eta_interval(const EventSequence& eta, double lo, double hi,
                       double alpha);

//! Reference event-space discrepancy: max over all intervals with endpoints
//! in the union of event times of |mu_a(I) - mu_b(I)|, each measure anchored
//! at its own last event. O(N^2) through suffix recurrences whose exponents
//! are all <= 0.
DiscrepancyResult event_discrepancy_bruteforce(const EventSequence& a,
                                               const EventSequence& b);

//! O(N) merged-difference fast path. Exactly equals the brute force when
//! alpha = 0 or both sequences share identical time stamps; otherwise an
//! approximation whose anchor mismatch is reported via anchor_gap.
DiscrepancyResult event_discrepancy_streaming(const EventSequence& a,
                                              const EventSequence& b);

//! Signal-space discrepancy approximated on a shared grid: trapezoid cells
//! with exponential fade, streamed through max/min chain recurrences, with
//! interval endpoints restricted to grid points.
DiscrepancyResult signal_discrepancy_grid(const SampledGrid& fa,
                                          const SampledGrid& fb, double alpha);

}  // namespace lifrec
