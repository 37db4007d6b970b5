#include "hmf/state.hpp"

#include <cmath>

#include "hmf/error.hpp"
#include "hmf/numeric.hpp"

namespace hmf {

ParticleState::ParticleState(std::vector<double> theta, std::vector<double> p)
    : theta_(std::move(theta)), p_(std::move(p)) {
  if (theta_.empty()) throw InvalidInput("particle state must hold at least one particle");
  if (theta_.size() != p_.size()) {
    throw InvalidInput("theta and p must have the same length");
  }
  for (double x : theta_) {
    if (!std::isfinite(x)) throw InvalidInput("non-finite angle in particle state");
  }
}

ParticleState ParticleState::cold(std::vector<double> theta) {
  std::vector<double> p(theta.size(), 0.0);
  return ParticleState(std::move(theta), std::move(p));
}

std::vector<double> ParticleState::normalized_theta() const {
  std::vector<double> out(theta_.size());
  for (std::size_t i = 0; i < theta_.size(); ++i) out[i] = normalize_angle(theta_[i]);
  return out;
}

bool ParticleState::is_cold() const noexcept {
  for (double x : p_) {
    if (x != 0.0) return false;
  }
  return true;
}

bool ParticleState::all_finite() const noexcept {
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    if (!std::isfinite(theta_[i]) || !std::isfinite(p_[i])) return false;
  }
  return true;
}

double normalize_angle(double theta) {
  double r = std::fmod(theta + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;
  // fmod can round up to exactly +pi.
  if (r >= kPi) r -= kTwoPi;
  return r;
}

namespace {

void require_nonempty(const ParticleState& state) {
  if (state.size() == 0) throw InvalidInput("empty particle state");
}

}  // namespace

Magnetization magnetization(const ParticleState& state, Summation mode) {
  require_nonempty(state);
  const auto theta = state.theta();
  Magnetization out;
  if (mode == Summation::kCompensated) {
    CompensatedSum cx, cy;
    for (double t : theta) {
      cx.add(std::cos(t));
      cy.add(std::sin(t));
    }
    out.mx = cx.value();
    out.my = cy.value();
  } else {
    double sx = 0.0, sy = 0.0;
    for (double t : theta) {
      sx += std::cos(t);
      sy += std::sin(t);
    }
    out.mx = sx;
    out.my = sy;
  }
  const double n = static_cast<double>(theta.size());
  out.mx /= n;
  out.my /= n;
  out.m = std::sqrt(out.mx * out.mx + out.my * out.my);
  return out;
}

std::vector<double> forces(const ParticleState& state) {
  const Magnetization mag = magnetization(state);
  const auto theta = state.theta();
  std::vector<double> f(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    f[k] = mag.my * std::cos(theta[k]) - mag.mx * std::sin(theta[k]);
  }
  return f;
}

double kinetic_energy_per_particle(const ParticleState& state, Summation mode) {
  require_nonempty(state);
  const auto p = state.p();
  double acc = 0.0;
  if (mode == Summation::kCompensated) {
    CompensatedSum c;
    for (double x : p) c.add(x * x);
    acc = c.value();
  } else {
    for (double x : p) acc += x * x;
  }
  return acc / (2.0 * static_cast<double>(p.size()));
}

double energy_per_particle(const ParticleState& state, Summation mode) {
  const Magnetization mag = magnetization(state, mode);
  return kinetic_energy_per_particle(state, mode) + 0.5 * (1.0 - mag.m * mag.m);
}

double total_momentum(const ParticleState& state, Summation mode) {
  require_nonempty(state);
  return sum(state.p(), mode);
}

Observables observe(const ParticleState& state, double t, Summation mode) {
  const Magnetization mag = magnetization(state, mode);
  Observables o;
  o.t = t;
  o.mx = mag.mx;
  o.my = mag.my;
  o.m = mag.m;
  o.u = kinetic_energy_per_particle(state, mode) + 0.5 * (1.0 - mag.m * mag.m);
  o.p_total = total_momentum(state, mode);
  return o;
}

}  // namespace hmf
