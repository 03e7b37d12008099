#pragma once

#include <utility>
#include <vector>

#include "lifrec/discrepancy.hpp"
#include "lifrec/reconstruction.hpp"

namespace lifrec {

//! Reconstruction error measured three ways: event-space discrepancy of the
//! re-sampled sequences, signal-space grid discrepancy, and max-norm.
struct ErrorTriple {
  double d_sample = 0.0;
  double d_signal = 0.0;
  double max_norm = 0.0;
};

struct SweepConfig {
  SamplerConfig sampler;
  WindowSpec window;
  Index r_min = 0;
  Index r_max = 0;
  double t_center = 0.0;  // synthesis grid time of n = 0
  double eval_lo = 0.0;   // comparison window (burn-in trimmed)
  double eval_hi = 0.0;
  double eval_step = 1e-3;
  int jobs = 1;
};

struct SweepEntry {
  Index r = 0;
  ErrorTriple errors;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // strictly increasing r
  SweepConfig config;
};

struct TuneResult {
  Index r_star = 0;    // argmin of d_sample, smallest r on ties
  Index basin_lo = 0;  // maximal contiguous run around r_star with
  Index basin_hi = 0;  // d_sample <= basin_factor * min
};

struct QuasiAuditReport {
  DiscrepancyResult d_signal;  // grid discrepancy of the pair
  DiscrepancyResult d_event;   // brute-force event discrepancy
  double bound = 0.0;          // 8 theta
  double tol = 0.0;            // numerical allowance on top of the bound
  // Nonnegative slack means the inequality holds:
  double slack_signal_side = 0.0;  // d_E + 8 theta + tol - d_F
  double slack_event_side = 0.0;   // d_F + 8 theta + tol - d_E

  bool violated() const {
    return slack_signal_side < 0.0 || slack_event_side < 0.0;
  }
};

//! Re-sample a reconstruction with the same sampler settings and measure the
//! event-space discrepancy against the original events.
std::pair<EventSequence, double> resample_error(const EventSequence& eta_a,
                                                const SignalFn& recon,
                                                const SamplerConfig& cfg);

ErrorTriple error_triple(const SampledGrid& f_grid,
                         const SampledGrid& recon_grid,
                         const EventSequence& eta_a, const EventSequence& eta_b,
                         double alpha);

//! Full pipeline per truncation index: sample once, estimate coefficients
//! once, then synthesize / re-sample / compare for every r in the range.
SweepResult sweep_truncation(const BandlimitedSignal& f, const SweepConfig& sc);

TuneResult tune(const SweepResult& sweep, double basin_factor = 1.1);

//! Check both quasi-isometry inequalities for a signal pair under one
//! sampler configuration. Violations are reported, never thrown.
QuasiAuditReport quasi_isometry_audit(const SignalFn& f, const SignalFn& g,
                                      const SamplerConfig& cfg,
                                      double grid_step, double tol);

}  // namespace lifrec
