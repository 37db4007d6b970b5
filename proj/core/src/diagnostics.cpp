#include "hmf/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "hmf/bessel.hpp"
#include "hmf/error.hpp"

namespace hmf {

namespace {

// Running sums of (t - t0, y - y0) for O(1) regression on any index range.
class PrefixRegression {
 public:
  PrefixRegression(std::span<const double> t, std::span<const double> y)
      : t0_(t.front()), y0_(y.front()) {
    const std::size_t n = t.size();
    sx_.assign(n + 1, 0.0);
    sy_ = sxx_ = sxy_ = syy_ = sx_;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = t[i] - t0_;
      const double v = y[i] - y0_;
      sx_[i + 1] = sx_[i] + x;
      sy_[i + 1] = sy_[i] + v;
      sxx_[i + 1] = sxx_[i] + x * x;
      sxy_[i + 1] = sxy_[i] + x * v;
      syy_[i + 1] = syy_[i] + v * v;
    }
  }

  // R^2 of the fit on samples [lo, hi).
  double r_squared(std::size_t lo, std::size_t hi) const {
    const double n = static_cast<double>(hi - lo);
    const double sx = sx_[hi] - sx_[lo];
    const double sy = sy_[hi] - sy_[lo];
    const double cxx = (sxx_[hi] - sxx_[lo]) - sx * sx / n;
    const double cxy = (sxy_[hi] - sxy_[lo]) - sx * sy / n;
    const double cyy = (syy_[hi] - syy_[lo]) - sy * sy / n;
    if (cxx <= 0.0) return 0.0;
    if (cyy <= 0.0) return 1.0;
    return std::clamp(cxy * cxy / (cxx * cyy), 0.0, 1.0);
  }

 private:
  double t0_, y0_;
  std::vector<double> sx_, sy_, sxx_, sxy_, syy_;
};

// Two-pass least squares on a contiguous range.
GrowthFit regress(std::span<const double> t, std::span<const double> y) {
  const std::size_t n = t.size();
  double mt = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mt += t[i];
    my += y[i];
  }
  mt /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = t[i] - mt;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw InvalidInput("fit window needs distinct sample times");
  GrowthFit f;
  f.gamma = sxy / sxx;
  const double intercept = my - f.gamma * mt;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (intercept + f.gamma * t[i]);
    ss_res += r * r;
  }
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  f.std_error = n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2) / sxx) : 0.0;
  f.window = {t.front(), t.back()};
  f.samples = n;
  return f;
}

}  // namespace

GrowthFit fit_growth_rate(std::span<const double> t, std::span<const double> m,
                          std::optional<TimeWindow> window) {
  if (t.size() != m.size()) throw InvalidInput("time and magnetization series differ in length");
  if (t.size() < kMinFitSamples) throw InvalidInput("growth fit needs at least 10 samples");

  if (window) {
    if (!(window->t_start < window->t_end)) throw InvalidInput("fit window must have t_start < t_end");
    std::vector<double> wt, wy;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < window->t_start || t[i] > window->t_end) continue;
      if (!(m[i] > 0.0)) throw InvalidInput("nonpositive magnetization inside the fit window");
      wt.push_back(t[i]);
      wy.push_back(std::log(m[i]));
    }
    if (wt.size() < kMinFitSamples) throw InvalidInput("fewer than 10 samples inside the fit window");
    return regress(wt, wy);
  }

  const double m0 = m.front();
  const double m_sat = *std::max_element(m.begin(), m.end());
  const double lower = kNoiseFloorFactor * m0;
  const double upper = m_sat / kSaturationFactor;
  if (!(m0 > 0.0) || !(lower < upper)) {
    throw NoExponentialPhase("no exponential phase: magnetization never leaves the noise band");
  }

  std::vector<double> logm(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) logm[i] = m[i] > 0.0 ? std::log(m[i]) : 0.0;
  const PrefixRegression pr(t, logm);

  std::size_t best_lo = 0, best_hi = 0;
  std::size_t i = 0;
  while (i < m.size()) {
    if (!(m[i] >= lower && m[i] <= upper)) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < m.size() && m[run_end] >= lower && m[run_end] <= upper) ++run_end;
    const std::size_t run = run_end - i;
    // Longest sub-span first; the first hit at a given length is the earliest.
    for (std::size_t len = run; len >= kMinFitSamples && len > best_hi - best_lo; --len) {
      bool found = false;
      for (std::size_t lo = i; lo + len <= run_end; ++lo) {
        if (pr.r_squared(lo, lo + len) >= kMinRSquared) {
          best_lo = lo;
          best_hi = lo + len;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    i = run_end;
  }
  if (best_hi - best_lo < kMinFitSamples) {
    throw NoExponentialPhase("no exponential phase: no window with R^2 >= 0.999");
  }
  return regress(t.subspan(best_lo, best_hi - best_lo),
                 std::span<const double>(logm).subspan(best_lo, best_hi - best_lo));
}

namespace {

void split(std::span<const Observables> samples, std::vector<double>& t, std::vector<double>& m) {
  t.reserve(samples.size());
  m.reserve(samples.size());
  for (const auto& o : samples) {
    t.push_back(o.t);
    m.push_back(o.m);
  }
}

}  // namespace

GrowthFit fit_growth_rate(std::span<const Observables> samples, std::optional<TimeWindow> window) {
  std::vector<double> t, m;
  split(samples, t, m);
  return fit_growth_rate(t, m, window);
}

GrowthFit fit_growth_rate(const Trajectory& trajectory, std::optional<TimeWindow> window) {
  return fit_growth_rate(std::span<const Observables>(trajectory.samples), window);
}

std::vector<GrowthSample> instantaneous_growth(std::span<const double> t,
                                               std::span<const double> m) {
  const std::size_t n = t.size();
  if (n != m.size()) throw InvalidInput("time and magnetization series differ in length");
  if (n < 3) throw InvalidInput("instantaneous growth needs at least 3 samples");
  for (double x : m) {
    if (!(x > 0.0)) throw InvalidInput("instantaneous growth needs M > 0 everywhere");
  }
  std::vector<GrowthSample> out(n);
  out[0] = {t[0], (m[1] - m[0]) / ((t[1] - t[0]) * m[0])};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = {t[i], (m[i + 1] - m[i - 1]) / ((t[i + 1] - t[i - 1]) * m[i])};
  }
  out[n - 1] = {t[n - 1], (m[n - 1] - m[n - 2]) / ((t[n - 1] - t[n - 2]) * m[n - 1])};
  return out;
}

std::vector<GrowthSample> instantaneous_growth(std::span<const Observables> samples) {
  std::vector<double> t, m;
  split(samples, t, m);
  return instantaneous_growth(t, m);
}

double growth_plateau(std::span<const GrowthSample> series, const TimeWindow& window) {
  double acc = 0.0;
  std::size_t count = 0;
  for (const auto& s : series) {
    if (s.t < window.t_start || s.t > window.t_end) continue;
    acc += s.rate;
    ++count;
  }
  if (count == 0) throw InvalidInput("no growth samples inside the window");
  return acc / static_cast<double>(count);
}

EquilibriumPrediction equilibrium_prediction_cold() {
  auto g = [](double x) { return bessel_i(1, x) / bessel_i(0, x) - 1.0 / x; };
  double lo = 1.05, hi = 10.0;
  double glo = g(lo);
  if (!(glo < 0.0 && g(hi) > 0.0)) {
    throw ConvergenceFailure("Bessel ratio does not bracket a root on [1.05, 10]");
  }
  double x = 0.5 * (lo + hi);
  bool done = false;
  for (int it = 0; it < 200; ++it) {
    x = 0.5 * (lo + hi);
    const double gx = g(x);
    if (std::abs(gx) < 1e-12 || hi - lo < 1e-15) {
      done = true;
      break;
    }
    if ((gx < 0.0) == (glo < 0.0)) {
      lo = x;
      glo = gx;
    } else {
      hi = x;
    }
  }
  if (!done) throw ConvergenceFailure("bisection for the cold equilibrium did not converge");
  EquilibriumPrediction p;
  p.beta = x * x;
  p.m_eq = 1.0 / x;
  p.t_eq = 1.0 / p.beta;
  return p;
}

TimescaleReport timescale_report(double gamma, double m_reference) {
  if (!(m_reference > 0.0) || m_reference > 1.0) throw InvalidInput("m_reference must lie in (0, 1]");
  if (!(gamma >= 0.0)) throw InvalidInput("gamma must be nonnegative");
  TimescaleReport r;
  r.gamma = gamma;
  r.omega_b = std::sqrt(m_reference);
  r.ratio = gamma / r.omega_b;
  return r;
}

SaturationStats saturation_stats(std::span<const Observables> samples, double t_from) {
  if (samples.empty() || t_from > samples.back().t || t_from < samples.front().t) {
    throw InvalidInput("t_from lies outside the trajectory");
  }
  double mean = 0.0;
  std::size_t n = 0;
  for (const auto& o : samples) {
    if (o.t >= t_from) {
      mean += o.m;
      ++n;
    }
  }
  if (n == 0) throw InvalidInput("empty saturation window");
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (const auto& o : samples) {
    if (o.t >= t_from) var += (o.m - mean) * (o.m - mean);
  }
  return {t_from, mean, std::sqrt(var / static_cast<double>(n)), n};
}

SaturationStats saturation_stats(const Trajectory& trajectory, double t_from) {
  return saturation_stats(std::span<const Observables>(trajectory.samples), t_from);
}

}  // namespace hmf
