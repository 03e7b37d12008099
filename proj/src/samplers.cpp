#include "lifrec/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "lifrec/errors.hpp"

namespace lifrec {

namespace {

// Refinement trigger: a panel sample within this fraction of theta starts an
// extremum refinement, so crossings peaking between samples are not missed.
// With quarter-step checks the nearest sample sits within |y''| (step/8)^2 / 2
// of any hump peak, which stays inside the band for the curvature the step
// rule 1/(32 omega) admits.
constexpr double kNearBand = 0.95;

// Exit slope below this fraction of theta per step marks a grazing contact.
constexpr double kGrazeFraction = 1e-3;

struct Hit {
  double t = 0.0;
  double y = 0.0;
};

// First time in (lo, hi] with |y| >= theta given |y(lo)| < theta <= |y(hi)|.
template <class Excursion>
Hit bisect_first(const Excursion& y_at, double lo, double hi, double y_hi,
                 double theta, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double ym = y_at(mid);
    if (std::abs(ym) >= theta) {
      hi = mid;
      y_hi = ym;
    } else {
      lo = mid;
    }
  }
  return {hi, y_hi};
}

struct Extremum {
  double t = 0.0;
  double y = 0.0;
  bool reached = false;  // |y| >= theta somewhere in the bracket
};

// Ternary search for the maximum of |y| on [lo, hi]; exits early as soon as
// any probe reaches theta. The bracket spans at most half a panel, which the
// step rule keeps unimodal for bandlimited inputs.
template <class Excursion>
Extremum max_abs(const Excursion& y_at, double lo, double hi, double theta,
                 double tol) {
  double a = lo, b = hi;
  while (b - a > tol) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    const double y1 = y_at(m1);
    if (std::abs(y1) >= theta) return {m1, y1, true};
    const double y2 = y_at(m2);
    if (std::abs(y2) >= theta) return {m2, y2, true};
    if (std::abs(y1) < std::abs(y2)) {
      a = m1;
    } else {
      b = m2;
    }
  }
  const double m = 0.5 * (a + b);
  const double ym = y_at(m);
  return {m, ym, std::abs(ym) >= theta};
}

void validate_config(const SamplerConfig& cfg) {
  if (!(cfg.theta > 0.0) || !std::isfinite(cfg.theta)) {
    throw ParameterError("theta must be positive");
  }
  if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha)) {
    throw ParameterError("alpha must be >= 0");
  }
  if (!(cfg.t_end > cfg.t_begin)) {
    throw ParameterError("horizon must have positive length");
  }
  if (!(cfg.step > 0.0)) throw ParameterError("step must be positive");
  if (!(cfg.crossing_tol > 0.0)) {
    throw ParameterError("crossing_tol must be positive");
  }
}

// Shared panel walk. The excursion y(tau) is evaluated from the current
// panel anchor (ta, ya); it resets to 0 at every event. Panels are checked
// at quarter points, near-threshold humps are refined to an exact
// above/below decision, and the detected crossing is bisected to within
// crossing_tol.
template <class FromAnchor, class OnEvent, class ExitSlope>
EventSequence walk(const SamplerConfig& cfg, double alpha_record,
                   const FromAnchor& y_from, const OnEvent& on_event,
                   const ExitSlope& exit_slope) {
  std::vector<double> ev_t, ev_v;
  std::vector<Index> grazing;

  double t = cfg.t_begin;
  double y = 0.0;
  while (t < cfg.t_end) {
    const double tb = std::min(t + cfg.step, cfg.t_end);
    auto y_at = [&](double tau) { return y_from(t, y, tau); };

    std::array<double, 5> ts, ys;
    ts[0] = t;
    ys[0] = y;
    for (int j = 1; j <= 4; ++j) {
      ts[j] = (j == 4) ? tb : t + 0.25 * static_cast<double>(j) * (tb - t);
      ys[j] = y_at(ts[j]);
    }

    bool fired = false;
    for (int j = 1; j <= 4 && !fired; ++j) {
      Hit hit;
      if (std::abs(ys[j]) >= cfg.theta) {
        hit = bisect_first(y_at, ts[j - 1], ts[j], ys[j], cfg.theta,
                           cfg.crossing_tol);
        fired = true;
      } else if (std::abs(ys[j]) >= kNearBand * cfg.theta) {
        const double hi = (j == 4) ? ts[4] : ts[j + 1];
        const Extremum ex =
            max_abs(y_at, ts[j - 1], hi, cfg.theta, cfg.crossing_tol);
        if (ex.reached) {
          hit = bisect_first(y_at, ts[j - 1], ex.t, ex.y, cfg.theta,
                             cfg.crossing_tol);
          fired = true;
        }
      }
      if (fired) {
        ev_t.push_back(hit.t);
        ev_v.push_back(hit.y > 0.0 ? cfg.theta : -cfg.theta);
        const double slope = exit_slope(hit.t, hit.y);
        if (slope * cfg.step <= kGrazeFraction * cfg.theta) {
          grazing.push_back(static_cast<Index>(ev_t.size()) - 1);
        }
        on_event(hit.t);
        t = hit.t;
        y = 0.0;
      }
    }
    if (!fired) {
      t = tb;
      y = ys[4];
    }
  }

  EventSequence eta;
  eta.theta = cfg.theta;
  eta.alpha = alpha_record;
  eta.t0 = cfg.t_begin;
  eta.times = Eigen::Map<const ArrayXd>(ev_t.data(), ev_t.size());
  eta.values = Eigen::Map<const ArrayXd>(ev_v.data(), ev_v.size());
  eta.grazing = std::move(grazing);
  return eta;
}

}  // namespace

double default_step(double omega, double alpha) {
  if (!(omega > 0.0)) throw ParameterError("omega must be positive");
  return std::min(1.0 / (32.0 * omega), 0.1 / std::max(alpha, 1.0));
}

EventSequence lif_sample(const SignalFn& f, const SamplerConfig& cfg) {
  validate_config(cfg);
  const double alpha = cfg.alpha;
  // y obeys y' = f - alpha y between events: exact leak propagation of the
  // anchor state plus a Gauss panel for the forcing.
  auto y_from = [&f, alpha](double ta, double ya, double tau) {
    if (tau <= ta) return ya;
    return std::exp(-alpha * (tau - ta)) * ya +
           leaky_integral(f, ta, tau, alpha, tau - ta);
  };
  auto on_event = [](double) {};
  auto exit_slope = [&f, alpha](double te, double ye) {
    const double fv = f(te);
    return (ye > 0.0 ? 1.0 : -1.0) * (fv - alpha * ye);
  };
  return walk(cfg, alpha, y_from, on_event, exit_slope);
}

EventSequence sod_sample(const SignalFn& g, double theta, double t_begin,
                         double t_end, double step, double crossing_tol) {
  SamplerConfig cfg;
  cfg.theta = theta;
  cfg.alpha = 0.0;
  cfg.t_begin = t_begin;
  cfg.t_end = t_end;
  cfg.step = step;
  cfg.crossing_tol = crossing_tol;
  validate_config(cfg);

  auto eval = [&g](double t) {
    const double v = g(t);
    if (!std::isfinite(v)) {
      throw NumericalError("non-finite signal value at t = " +
                           std::to_string(t));
    }
    return v;
  };
  double ref = eval(t_begin);
  auto y_from = [&eval, &ref](double, double, double tau) {
    return eval(tau) - ref;
  };
  auto on_event = [&eval, &ref](double te) { ref = eval(te); };
  auto exit_slope = [&eval, crossing_tol](double te, double ye) {
    const double d = std::max(crossing_tol, 1e-9);
    const double gp = (eval(te + d) - eval(te)) / d;
    return (ye > 0.0 ? 1.0 : -1.0) * gp;
  };
  return walk(cfg, 0.0, y_from, on_event, exit_slope);
}

EventSequence restrict_to(const EventSequence& eta, double lo, double hi) {
  if (lo > hi) throw ParameterError("restrict_to: lo > hi");
  const double* begin = eta.times.data();
  const double* end = begin + eta.times.size();
  const Index first =
      std::lower_bound(begin, end, lo) - begin;
  const Index last =
      std::upper_bound(begin, end, hi) - begin;  // one past
  EventSequence out;
  out.theta = eta.theta;
  out.alpha = eta.alpha;
  out.t0 = lo;
  const Index n = last - first;
  out.times = eta.times.segment(first, n);
  out.values = eta.values.segment(first, n);
  for (Index g : eta.grazing) {
    if (g >= first && g < last) out.grazing.push_back(g - first);
  }
  return out;
}

}  // namespace lifrec
