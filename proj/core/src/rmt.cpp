#include "hmf/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hmf/error.hpp"
#include "hmf/numeric.hpp"
#include "hmf/quadrature.hpp"
#include "hmf/state.hpp"

namespace hmf {

namespace {

// Quadrature panels for a density: its own segments, refined around the
// mode of narrow peaks so the first Gauss-Legendre pass cannot step over them.
std::vector<double> panels(const AngularDensity& d, double peak_scale) {
  std::vector<double> edges = d.segments();
  if (peak_scale > 0.0) {
    for (double k : {-12.0, -6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0, 12.0}) {
      const double x = k * peak_scale;
      if (x > d.lo && x < d.hi) edges.push_back(x);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  return edges;
}

MomentPair moments_on_panels(const AngularDensity& d, const std::vector<double>& edges) {
  const double norm = quad::integrate_segments(d.pdf, edges, 1e-12);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw InvalidInput("density is not normalized (integral = " + std::to_string(norm) + ")");
  }
  const auto& f = d.pdf;
  const double mu = quad::integrate_2d(
      [&f](double x, double y) { return f(x) * f(y) * std::cos(x - y); }, edges,
      kMomentTolerance);
  const double second = quad::integrate_2d(
      [&f](double x, double y) {
        const double c = std::cos(x - y);
        return f(x) * f(y) * c * c;
      },
      edges, kMomentTolerance);
  double var = second - mu * mu;
  if (var < -1e-10) throw ConvergenceFailure("negative variance from moment quadrature");
  MomentPair m;
  m.mu = mu;
  m.sigma_sq = std::max(var, 0.0);
  m.mu_source = MomentSource::kQuadrature;
  m.sigma_sq_source = MomentSource::kQuadrature;
  return m;
}

}  // namespace

MomentPair moments_quadrature(const AngularDensity& density) {
  if (!density.pdf || !(density.hi > density.lo)) throw InvalidInput("empty density support");
  return moments_on_panels(density, density.segments());
}

MomentPair moments_uniform(double delta_theta) {
  if (!(delta_theta > 0.0) || !(delta_theta < 0.5 * kPi)) {
    throw InvalidInput("uniform moments need 0 < delta_theta < pi/2");
  }
  MomentPair m = moments_quadrature(waterbag_density(delta_theta));
  const double s = sinc(delta_theta);
  m.mu = s * s;
  m.mu_source = MomentSource::kClosedForm;
  return m;
}

MomentPair moments_gaussian(double sigma_theta) {
  const AngularDensity d = truncated_gaussian_density(sigma_theta);
  return moments_on_panels(d, panels(d, sigma_theta));
}

double sigma_sq_uniform_textbook(double delta_theta) {
  const double s = sinc(delta_theta);
  const double c = std::cos(delta_theta);
  const double mu = s * s;
  return 0.5 + 0.25 * c * c * s * s - mu * mu;
}

std::complex<double> erf_contour(std::complex<double> z, double abs_tol) {
  if (z == std::complex<double>{}) return {};
  const std::complex<double> z2 = z * z;
  auto integrand = [z2](double s) { return std::exp(-z2 * (s * s)); };
  // Refine near s = 0 where exp(-z^2 s^2) decays on the scale 1/|z|.
  std::vector<double> edges{0.0};
  const double scale = 1.0 / std::abs(z);
  for (double k : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    if (k * scale < 1.0) edges.push_back(k * scale);
  }
  edges.push_back(1.0);
  const double mag = std::max(1.0, std::abs(quad::detail::gauss10(integrand, 0.0, 1.0)));
  const std::complex<double> integral =
      quad::integrate_segments(integrand, edges, abs_tol * mag);
  return 2.0 * z / std::sqrt(kPi) * integral;
}

MomentPair moments_gaussian_closed_form(double sigma_theta) {
  if (!(sigma_theta > 0.0) || sigma_theta > 5.0) {
    throw InvalidInput("closed-form Gaussian moments are evaluated for 0 < sigma_theta <= 5");
  }
  const double s2 = sigma_theta * sigma_theta;
  const double denom = 2.0 * sigma_theta * std::sqrt(2.0);
  const double e = std::erf(kPi / denom);
  const double re1 = erf_contour({kPi / denom, -2.0 * s2 / denom}).real();
  const double re2 = erf_contour({kPi / denom, -4.0 * s2 / denom}).real();
  MomentPair m;
  m.mu = std::exp(-s2) * re1 * re1 / (e * e);
  m.sigma_sq = 0.5 + std::exp(-4.0 * s2) / 8.0 * (2.0 * re2) * (2.0 * re2) / (e * e) - m.mu * m.mu;
  m.mu_source = MomentSource::kClosedForm;
  m.sigma_sq_source = MomentSource::kClosedForm;
  return m;
}

LambdaSqStats expected_lambda_sq(std::size_t n, const MomentPair& moments) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("RMT prediction needs an even n >= 4");
  if (!(moments.mu > 0.0)) {
    throw TheoremInapplicable("largest-eigenvalue law needs a positive mean entry (mu > 0)");
  }
  if (moments.sigma_sq < 0.0) throw InvalidInput("negative variance");
  const double dn = static_cast<double>(n);
  LambdaSqStats s;
  s.mean = (2.0 / dn) * (1.0 + (0.5 * dn - 1.0) * moments.mu + moments.sigma_sq / moments.mu);
  s.variance = 8.0 * moments.sigma_sq / (dn * dn);
  return s;
}

double expected_gamma(std::size_t n, const MomentPair& moments) {
  const LambdaSqStats s = expected_lambda_sq(n, moments);
  if (s.variance == 0.0) return std::sqrt(std::clamp(s.mean, 0.0, 1.0));
  const double w = std::sqrt(s.variance);
  const double inv_2w2 = 1.0 / (2.0 * s.variance);
  auto weight = [&](double x) {
    const double d = x - s.mean;
    return std::exp(-d * d * inv_2w2);
  };
  std::vector<double> edges{0.0};
  for (double k : {-40.0, -10.0, -5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 5.0, 10.0, 40.0}) {
    const double x = s.mean + k * w;
    if (x > 0.0 && x < 1.0) edges.push_back(x);
  }
  edges.push_back(1.0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const double tol = 1e-10 * std::min(1.0, w);
  const double norm = quad::integrate_segments(weight, edges, tol);
  if (!(norm > 0.0)) throw ConvergenceFailure("normalization of the growth-rate law vanished");
  const double num =
      quad::integrate_segments([&](double x) { return std::sqrt(x) * weight(x); }, edges, tol);
  return num / norm;
}

RmtPrediction rmt_predict(std::size_t n, const MomentPair& moments) {
  const LambdaSqStats s = expected_lambda_sq(n, moments);
  RmtPrediction p;
  p.n = n;
  p.lambda_sq_mean = s.mean;
  p.lambda_sq_var = s.variance;
  p.gamma_mean = expected_gamma(n, moments);
  return p;
}

}  // namespace hmf
