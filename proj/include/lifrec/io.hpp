#pragma once

#include <string>
#include <vector>

#include "lifrec/estimator.hpp"

namespace lifrec {

//! %.17g — shortest text that round-trips a double exactly.
std::string format_full(double x);

// Signal JSON: {"omega": ..., "atoms": [{"c": ..., "a": ...}, ...]}
void write_signal_json(const std::string& path, const BandlimitedSignal& f);
BandlimitedSignal read_signal_json(const std::string& path);

// Event CSV (header "t,v", full precision) plus a metadata sidecar JSON
// {theta, alpha, t0, horizon, step, crossing_tol}.
void write_events_csv(const std::string& path, const EventSequence& eta);
void write_sampler_sidecar(const std::string& path, const EventSequence& eta,
                           const SamplerConfig& cfg);
EventSequence read_events(const std::string& csv_path,
                          const std::string& sidecar_path);

// Grid CSV: header "t,value"; the grid must be uniform.
void write_grid_csv(const std::string& path, const SampledGrid& g);
SampledGrid read_grid_csv(const std::string& path);

// Coefficient CSV: header "n,a_n"; n must be a contiguous symmetric range.
void write_coeffs_csv(const std::string& path, const CoefficientSeries& c);
CoefficientSeries read_coeffs_csv(const std::string& path, double T,
                                  double t_center);

// Sweep CSV: header "r,d_sample,d_signal,max_norm".
void write_sweep_csv(const std::string& path, const SweepResult& s);
std::vector<SweepEntry> read_sweep_csv(const std::string& path);

std::string discrepancy_to_json(const DiscrepancyResult& d);
DiscrepancyResult discrepancy_from_json(const std::string& text);

void write_audit_json(const std::string& path,
                      const std::vector<QuasiAuditReport>& reports,
                      double theta);

}  // namespace lifrec
