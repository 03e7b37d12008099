#include "lifrec/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lifrec/errors.hpp"

namespace lifrec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double sinc(double x) {
  const double px = kPi * x;
  if (std::abs(px) < 1e-4) {
    const double p2 = px * px;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(px) / px;
}

double sinc_deriv(double x) {
  const double px = kPi * x;
  if (std::abs(px) < 1e-3) {
    const double p2 = px * px;
    return kPi * px * (-1.0 / 3.0 + p2 * (1.0 / 30.0 - p2 / 840.0));
  }
  return (std::cos(px) - sinc(x)) / x;
}

double BandlimitedSignal::operator()(double t) const {
  const double w2 = 2.0 * omega;
  double s = 0.0;
  for (Index m = 0; m < centers.size(); ++m) {
    s += amplitudes[m] * sinc(w2 * (t - centers[m]));
  }
  return s;
}

ArrayXd BandlimitedSignal::sample(const ArrayXd& t) const {
  ArrayXd out = ArrayXd::Zero(t.size());
  const double w2 = 2.0 * omega;
  for (Index m = 0; m < centers.size(); ++m) {
    out += amplitudes[m] *
           (w2 * (t - centers[m])).unaryExpr([](double x) { return sinc(x); });
  }
  return out;
}

SignalFn BandlimitedSignal::fn() const {
  return [copy = *this](double t) { return copy(t); };
}

BandlimitedSignal generate_random_bandlimited(double omega, int n_atoms,
                                              Interval amp_range,
                                              Interval time_window,
                                              std::uint64_t seed) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ParameterError("omega must be positive and finite");
  }
  if (n_atoms < 1) throw ParameterError("n_atoms must be >= 1");
  if (!(amp_range.lo <= amp_range.hi)) {
    throw ParameterError("amp_range is reversed");
  }
  if (!(time_window.lo <= time_window.hi)) {
    throw ParameterError("time_window is reversed");
  }

  std::mt19937_64 rng(seed);
  auto draw = [&rng](const Interval& iv) {
    if (iv.lo == iv.hi) return iv.lo;
    return std::uniform_real_distribution<double>(iv.lo, iv.hi)(rng);
  };

  BandlimitedSignal f;
  f.omega = omega;
  f.centers.resize(n_atoms);
  f.amplitudes.resize(n_atoms);
  for (int m = 0; m < n_atoms; ++m) f.centers[m] = draw(time_window);
  for (int m = 0; m < n_atoms; ++m) f.amplitudes[m] = draw(amp_range);
  return f;
}

GridSpec grid_over(double lo, double hi, double h) {
  if (!(h > 0.0) || !(hi > lo)) throw ParameterError("invalid grid bounds");
  const Index count = static_cast<Index>(std::floor((hi - lo) / h + 1e-9)) + 1;
  return {lo, h, count};
}

ArrayXd grid_times(const GridSpec& g) {
  ArrayXd t(g.count);
  for (Index i = 0; i < g.count; ++i) t[i] = g.t0 + g.h * static_cast<double>(i);
  return t;
}

SampledGrid render(const SignalFn& f, const GridSpec& g) {
  if (g.count < 2 || !(g.h > 0.0)) throw ParameterError("grid needs h > 0 and >= 2 points");
  SampledGrid out;
  out.t0 = g.t0;
  out.h = g.h;
  out.values.resize(g.count);
  for (Index i = 0; i < g.count; ++i) out.values[i] = f(out.time_at(i));
  return out;
}

SampledGrid render(const BandlimitedSignal& f, const GridSpec& g) {
  if (g.count < 2 || !(g.h > 0.0)) throw ParameterError("grid needs h > 0 and >= 2 points");
  SampledGrid out;
  out.t0 = g.t0;
  out.h = g.h;
  out.values = f.sample(grid_times(g));
  return out;
}

double max_norm_distance(const SampledGrid& a, const SampledGrid& b) {
  if (a.t0 != b.t0 || a.h != b.h || a.size() != b.size()) {
    throw ParameterError("grid mismatch (t0, h and length must agree)");
  }
  if (a.size() == 0) return 0.0;
  return (a.values - b.values).abs().maxCoeff();
}

double reference_leaky_average(const SignalFn& f, double t, double alpha,
                               double t_start, double max_panel) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("alpha must be >= 0");
  }
  if (!(t_start < t)) throw ParameterError("t_start must be < t");
  return leaky_integral(f, t_start, t, alpha, max_panel);
}

double reference_leaky_average(const BandlimitedSignal& f, double t,
                               double alpha, double t_start) {
  return reference_leaky_average(f.fn(), t, alpha, t_start,
                                 1.0 / (64.0 * f.omega));
}

}  // namespace lifrec
