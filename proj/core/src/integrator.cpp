#include "hmf/integrator.hpp"

#include <cmath>
#include <vector>

#include "hmf/error.hpp"
#include "hmf/numeric.hpp"

namespace hmf {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("dt must be positive and finite");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw InvalidInput("t_end must be nonnegative and finite");
  }
  if (sample_every < 1) throw InvalidInput("sample_every must be >= 1");
}

double YoshidaWeights::outer() noexcept {
  static const double w = 1.0 / (2.0 - std::cbrt(2.0));
  return w;
}

double YoshidaWeights::middle() noexcept {
  static const double w = -std::cbrt(2.0) / (2.0 - std::cbrt(2.0));
  return w;
}

namespace {

// Drift-kick-drift sweeps with scratch buffers for the trigonometric values,
// which serve both the magnetization sum and the per-particle force.
class Stepper {
 public:
  Stepper(std::size_t n, Summation mode) : cos_(n), sin_(n), mode_(mode) {}

  void drift(ParticleState& s, double h) const {
    auto theta = s.theta_mut();
    const auto p = s.p();
    for (std::size_t k = 0; k < theta.size(); ++k) theta[k] += h * p[k];
  }

  void kick(ParticleState& s, double h) {
    const auto theta = s.theta();
    const std::size_t n = theta.size();
    for (std::size_t k = 0; k < n; ++k) {
      cos_[k] = std::cos(theta[k]);
      sin_[k] = std::sin(theta[k]);
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    const double mx = sum(cos_, mode_) * inv_n;
    const double my = sum(sin_, mode_) * inv_n;
    auto p = s.p_mut();
    for (std::size_t k = 0; k < n; ++k) p[k] += h * (my * cos_[k] - mx * sin_[k]);
  }

  void advance(ParticleState& s, double dt, Scheme scheme) {
    if (scheme == Scheme::kLeapfrog2) {
      drift(s, 0.5 * dt);
      kick(s, dt);
      drift(s, 0.5 * dt);
      return;
    }
    const double w1 = YoshidaWeights::outer() * dt;
    const double w0 = YoshidaWeights::middle() * dt;
    drift(s, 0.5 * w1);
    kick(s, w1);
    drift(s, 0.5 * (w1 + w0));
    kick(s, w0);
    drift(s, 0.5 * (w0 + w1));
    kick(s, w1);
    drift(s, 0.5 * w1);
  }

 private:
  std::vector<double> cos_;
  std::vector<double> sin_;
  Summation mode_;
};

void check_finite(const ParticleState& s, std::int64_t step_index) {
  if (!s.all_finite()) throw NumericalBlowup(step_index, "non-finite coordinate after step");
}

}  // namespace

void step_in_place(ParticleState& state, double dt, Scheme scheme, std::int64_t step_index,
                   Summation mode) {
  if (!(dt > 0.0)) throw InvalidInput("step requires dt > 0");
  Stepper stepper(state.size(), mode);
  stepper.advance(state, dt, scheme);
  check_finite(state, step_index);
}

ParticleState step(const ParticleState& state, double dt, Scheme scheme,
                   std::int64_t step_index) {
  ParticleState out = state;
  step_in_place(out, dt, scheme, step_index);
  return out;
}

ParticleState reverse_momenta(const ParticleState& state) {
  ParticleState out = state;
  for (double& x : out.p_mut()) x = -x;
  return out;
}

Trajectory evolve(const ParticleState& state, const IntegratorConfig& config) {
  config.validate();
  Trajectory traj;
  traj.initial = state;
  ParticleState s = state;
  traj.samples.push_back(observe(s, 0.0, config.summation));

  // Full steps, plus one shortened step unless t_end is a multiple of dt.
  const double ratio = config.t_end / config.dt;
  std::int64_t full = static_cast<std::int64_t>(std::floor(ratio));
  double last = config.t_end - static_cast<double>(full) * config.dt;
  if (last <= 1e-9 * config.dt) {
    last = 0.0;
  } else if (config.dt - last <= 1e-9 * config.dt) {
    ++full;
    last = 0.0;
  }

  Stepper stepper(s.size(), config.summation);
  const std::int64_t total = full + (last > 0.0 ? 1 : 0);
  for (std::int64_t i = 1; i <= total; ++i) {
    const bool partial = i > full;
    stepper.advance(s, partial ? last : config.dt, config.scheme);
    check_finite(s, i);
    const bool final_step = i == total;
    if (final_step || i % config.sample_every == 0) {
      const double t = final_step ? config.t_end : static_cast<double>(i) * config.dt;
      traj.samples.push_back(observe(s, t, config.summation));
    }
  }
  traj.final = std::move(s);
  return traj;
}

}  // namespace hmf
