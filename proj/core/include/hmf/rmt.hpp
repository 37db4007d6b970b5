#pragma once

#include <complex>
#include <cstddef>

#include "hmf/density.hpp"

namespace hmf {

enum class MomentSource { kClosedForm, kQuadrature };

// Statistics of an off-diagonal entry L_ij = cos(theta_i - theta_j) with
// theta_i, theta_j i.i.d. from the cluster density: mu is the mean and
// sigma_sq the variance.
struct MomentPair {
  double mu = 0.0;
  double sigma_sq = 0.0;
  MomentSource mu_source = MomentSource::kQuadrature;
  MomentSource sigma_sq_source = MomentSource::kQuadrature;
};

struct RmtPrediction {
  std::size_t n = 0;
  double lambda_sq_mean = 0.0;
  double lambda_sq_var = 0.0;
  double gamma_mean = 0.0;
};

inline constexpr double kMomentTolerance = 1e-10;

// Double integrals of cos and cos^2 of (t - t') against f0 x f0.
MomentPair moments_quadrature(const AngularDensity& density);

// mu = sinc^2(dtheta) in closed form, sigma_sq by quadrature.
MomentPair moments_uniform(double delta_theta);

// Truncated Gaussian on [-pi/2, pi/2]; both moments by quadrature.
MomentPair moments_gaussian(double sigma_theta);

// Cross-check path: the complex-erf closed forms for the truncated Gaussian.
MomentPair moments_gaussian_closed_form(double sigma_theta);

// The textbook closed form for the waterbag variance,
// 1/2 + cos^2(dt) sinc^2(dt) / 4 - mu^2. It under-weights the cos(2x) term by
// a factor 2 relative to its defining integral, which is
// 1/2 + sinc^2(2 dt) / 2 - mu^2; kept for the cross-check only.
double sigma_sq_uniform_textbook(double delta_theta);

// erf(z) = 2 z / sqrt(pi) * int_0^1 exp(-z^2 s^2) ds along the straight
// contour from 0 to z.
std::complex<double> erf_contour(std::complex<double> z, double abs_tol = 1e-12);

struct LambdaSqStats {
  double mean = 0.0;
  double variance = 0.0;
};

// mean = (2/n)(1 + (n/2 - 1) mu + sigma^2/mu), variance = 8 sigma^2 / n^2.
// Throws TheoremInapplicable when mu <= 0.
LambdaSqStats expected_lambda_sq(std::size_t n, const MomentPair& moments);

// <gamma> = int_0^1 sqrt(x) g(x) dx / int_0^1 g(x) dx, with g the normal
// density of lambda^2.
double expected_gamma(std::size_t n, const MomentPair& moments);

RmtPrediction rmt_predict(std::size_t n, const MomentPair& moments);

}  // namespace hmf
