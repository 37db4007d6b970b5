#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hmf {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Accumulation strategy for the O(N) sums. Compensated (Kahan-Neumaier)
// summation is worth switching on for N > 1e5.
enum class Summation { kPlain, kCompensated };

// Angles and momenta of N rotators. Angles are kept unwrapped; use
// normalized_theta() for output in [-pi, pi).
class ParticleState {
 public:
  ParticleState() = default;
  ParticleState(std::vector<double> theta, std::vector<double> p);

  // Cold state: all momenta zero.
  static ParticleState cold(std::vector<double> theta);

  std::size_t size() const noexcept { return theta_.size(); }

  std::span<const double> theta() const noexcept { return theta_; }
  std::span<const double> p() const noexcept { return p_; }
  std::span<double> theta_mut() noexcept { return theta_; }
  std::span<double> p_mut() noexcept { return p_; }

  std::vector<double> normalized_theta() const;
  bool is_cold() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const ParticleState&, const ParticleState&) = default;

 private:
  std::vector<double> theta_;
  std::vector<double> p_;
};

struct Magnetization {
  double mx = 0.0;
  double my = 0.0;
  double m = 0.0;
};

struct Observables {
  double t = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double m = 0.0;
  double u = 0.0;
  double p_total = 0.0;
};

// Wraps an angle into [-pi, pi). Idempotent.
double normalize_angle(double theta);

Magnetization magnetization(const ParticleState& state,
                            Summation mode = Summation::kPlain);

// F_k = My cos(theta_k) - Mx sin(theta_k).
std::vector<double> forces(const ParticleState& state);

double kinetic_energy_per_particle(const ParticleState& state,
                                   Summation mode = Summation::kPlain);
double energy_per_particle(const ParticleState& state,
                           Summation mode = Summation::kPlain);
double total_momentum(const ParticleState& state,
                      Summation mode = Summation::kPlain);

Observables observe(const ParticleState& state, double t,
                    Summation mode = Summation::kPlain);

}  // namespace hmf
