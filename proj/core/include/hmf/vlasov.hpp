#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "hmf/density.hpp"
#include "hmf/state.hpp"

namespace hmf {

// n_{0,k} for k = 0..K; negative k follow by conjugation and |k| > K are 0.
struct FourierTable {
  std::vector<std::complex<double>> coeffs;
};

// Empirical density of a particle sample.
struct SampledDensity {
  std::vector<double> theta;
};

// Angular density n0 on the circle in one of three representations. The
// Fourier convention is n_{0,k} = (1/2 pi) int n0(t) exp(-i k t) dt, so that
// n_{0,0} = 1/(2 pi).
class DensityProfile {
 public:
  using Rep = std::variant<AngularDensity, FourierTable, SampledDensity>;

  explicit DensityProfile(AngularDensity density);
  explicit DensityProfile(FourierTable table);
  explicit DensityProfile(SampledDensity sample);
  static DensityProfile from_state(const ParticleState& state);

  const Rep& rep() const noexcept { return rep_; }

 private:
  Rep rep_;
};

inline constexpr double kFourierTolerance = 1e-13;
inline constexpr double kUnmagnetizedTolerance = 1e-10;

// Analytic densities are integrated by adaptive quadrature and must be
// normalized (to 1e-10); samples use the plain empirical average.
std::complex<double> fourier_coefficient(const DensityProfile& profile, int k);

struct DispersionRoots {
  double omega_sq_plus = 0.0;   // -pi n00 + pi |n02|
  double omega_sq_minus = 0.0;  // -pi n00 - pi |n02|
  double n00 = 0.0;
  std::complex<double> n02;
  // |n02| <= n00, which holds for every nonnegative density. False flags a
  // profile (typically a hand-written table) that violates it.
  bool admissible = true;
};

// Nonzero roots omega^2 of the cold-fluid dispersion relation. Throws
// MagnetizedProfile when |n_{0,1}| >= 1e-10.
DispersionRoots dispersion_roots(const DensityProfile& profile);

// sqrt(1 + 2 pi |n02|) / sqrt(2), from the most unstable root.
double vlasov_growth_rate(const DensityProfile& profile);

struct WarmRate {
  double gamma = 0.0;
  bool linearly_stable = false;
};

// sqrt(1/2 - 3T) for T < 1/6, else 0 and linearly_stable.
WarmRate warm_waterbag_growth_rate(double temperature);

}  // namespace hmf
