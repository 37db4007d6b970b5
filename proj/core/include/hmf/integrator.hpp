#pragma once

#include <cstdint>
#include <vector>

#include "hmf/state.hpp"

namespace hmf {

enum class Scheme { kYoshida4, kLeapfrog2 };

struct IntegratorConfig {
  double dt = 0.05;
  double t_end = 0.0;
  std::int64_t sample_every = 1;
  Scheme scheme = Scheme::kYoshida4;
  Summation summation = Summation::kPlain;

  // Throws InvalidInput unless dt > 0, t_end >= 0, sample_every >= 1.
  void validate() const;
};

struct Trajectory {
  std::vector<Observables> samples;
  ParticleState initial;
  ParticleState final;
};

// Triple-jump weights of the fourth-order Yoshida composition.
struct YoshidaWeights {
  static double outer() noexcept;   // 1 / (2 - 2^(1/3))
  static double middle() noexcept;  // -2^(1/3) / (2 - 2^(1/3))
};

// One step of size dt. Throws NumericalBlowup (carrying step_index) when a
// coordinate becomes non-finite.
ParticleState step(const ParticleState& state, double dt, Scheme scheme,
                   std::int64_t step_index = 0);

// In-place variant used by evolve(); avoids reallocating the state per step.
void step_in_place(ParticleState& state, double dt, Scheme scheme,
                   std::int64_t step_index = 0,
                   Summation mode = Summation::kPlain);

// Integrates to t_end, sampling every `sample_every` steps. The last step is
// shortened so the final sample lands exactly on t_end.
Trajectory evolve(const ParticleState& state, const IntegratorConfig& config);

// p -> -p. Integrating a reversed state forward retraces the trajectory.
ParticleState reverse_momenta(const ParticleState& state);

}  // namespace hmf
