#include <gtest/gtest.h>

#include <cmath>

#include "hmf/density.hpp"
#include "hmf/error.hpp"
#include "hmf/rmt.hpp"
#include "hmf/state.hpp"
#include "oracles.hpp"

namespace hmf {
namespace {

TEST(Moments, UniformReferenceValues) {
  const auto m = moments_uniform(kPi / 4);
  EXPECT_NEAR(m.mu, 0.810569469138702172, 1e-14);
  EXPECT_NEAR(m.sigma_sq, 0.045619502984878091, 1e-10);
  EXPECT_EQ(m.mu_source, MomentSource::kClosedForm);
  EXPECT_EQ(m.sigma_sq_source, MomentSource::kQuadrature);
}

TEST(Moments, GaussianReferenceValues) {
  const auto a = moments_gaussian(0.5);
  EXPECT_NEAR(a.mu, 0.781825167870795375, 1e-10);
  EXPECT_NEAR(a.sigma_sq, 0.074264508496883864, 1e-10);
  const auto b = moments_gaussian(1.0);
  EXPECT_NEAR(b.mu, 0.541404241111501612, 1e-10);
  EXPECT_NEAR(b.sigma_sq, 0.232647625661236007, 1e-10);
}

TEST(Moments, QuadratureMatchesSeparableOracle) {
  for (double d : {0.1, 0.5, 0.9, 1.3, 1.55}) {
    const auto wb = waterbag_density(d);
    const auto ref = testing::separable_moments(wb.pdf, wb.lo, wb.hi);
    const auto m = moments_uniform(d);
    EXPECT_NEAR(m.mu, ref.mu, 1e-10) << d;
    EXPECT_NEAR(m.sigma_sq, ref.sigma_sq, 1e-10) << d;
    const auto q = moments_quadrature(wb);
    EXPECT_NEAR(q.mu, m.mu, 1e-10) << d;
  }
  for (double s : {0.05, 0.2, 0.7, 1.5, 4.0}) {
    const auto g = truncated_gaussian_density(s);
    const auto ref = testing::separable_moments(g.pdf, g.lo, g.hi);
    const auto m = moments_gaussian(s);
    EXPECT_NEAR(m.mu, ref.mu, 1e-10) << s;
    EXPECT_NEAR(m.sigma_sq, ref.sigma_sq, 1e-10) << s;
  }
}

TEST(Moments, GaussianClosedFormAgreesWithQuadrature) {
  for (double s : {0.1, 0.3, 0.5, 1.0, 2.0, 5.0}) {
    const auto q = moments_gaussian(s);
    const auto c = moments_gaussian_closed_form(s);
    EXPECT_NEAR(c.mu, q.mu, 1e-10) << s;
    EXPECT_NEAR(c.sigma_sq, q.sigma_sq, 1e-10) << s;
  }
  EXPECT_THROW(moments_gaussian_closed_form(6.0), InvalidInput);
}

TEST(Moments, TextbookUniformVarianceDisagrees) {
  for (double d : {0.5, kPi / 4, 1.2}) {
    EXPECT_GT(std::abs(sigma_sq_uniform_textbook(d) - moments_uniform(d).sigma_sq), 1e-3) << d;
  }
  EXPECT_LT(sigma_sq_uniform_textbook(kPi / 4), 0.0);
}

TEST(Moments, NarrowLimits) {
  const auto u = moments_uniform(1e-3);
  EXPECT_NEAR(u.mu, 1.0, 1e-6);
  EXPECT_NEAR(u.sigma_sq, 0.0, 1e-10);
  const auto g = moments_gaussian(1e-3);
  EXPECT_NEAR(g.mu, 1.0, 1e-5);
  EXPECT_GE(g.sigma_sq, 0.0);
}

TEST(Moments, RejectsBadInputs) {
  EXPECT_THROW(moments_uniform(0.0), InvalidInput);
  EXPECT_THROW(moments_uniform(kPi / 2), InvalidInput);
  AngularDensity bad{[](double) { return 2.0; }, 0.0, 1.0, {}, 2.0};
  EXPECT_THROW(moments_quadrature(bad), InvalidInput);
}

TEST(Erf, ContourMatchesRealErf) {
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.5, 6.0}) {
    EXPECT_NEAR(erf_contour({x, 0.0}).real(), std::erf(x), 1e-13) << x;
    EXPECT_NEAR(erf_contour({x, 0.0}).imag(), 0.0, 1e-15);
  }
}

TEST(Erf, ConjugateSymmetryAndOddness) {
  const std::complex<double> z{0.8, -0.6};
  EXPECT_NEAR(std::abs(erf_contour(std::conj(z)) - std::conj(erf_contour(z))), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(erf_contour(-z) + erf_contour(z)), 0.0, 1e-13);
  // erf(i y) = i erfi(y); erfi(1) = 1.6504257587975428760.
  EXPECT_NEAR(erf_contour({0.0, 1.0}).imag(), 1.6504257587975428760, 1e-12);
}

TEST(Prediction, UniformAtQuarterPi) {
  const auto m = moments_uniform(kPi / 4);
  const auto s = expected_lambda_sq(1000, m);
  EXPECT_NEAR(s.mean, 0.811060891812283533, 1e-10);
  EXPECT_NEAR(s.variance, 3.64956023879024726e-7, 1e-15);
  EXPECT_NEAR(expected_gamma(1000, m), 0.900589129025449800, 1e-9);
  const auto p = rmt_predict(1000, m);
  EXPECT_EQ(p.n, 1000u);
  EXPECT_EQ(p.lambda_sq_mean, s.mean);
  EXPECT_EQ(p.gamma_mean, expected_gamma(1000, m));
}

TEST(Prediction, GammaCloseToRootOfMeanForSmallVariance) {
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const auto m = moments_gaussian(0.4);
    const auto s = expected_lambda_sq(n, m);
    const double g = expected_gamma(n, m);
    // Jensen: <sqrt x> <= sqrt <x>, with gap ~ var / (8 mean^1.5).
    EXPECT_LE(g, std::sqrt(s.mean));
    EXPECT_NEAR(g, std::sqrt(s.mean), 2.0 * s.variance / std::pow(s.mean, 1.5));
  }
  MomentPair zero{0.5, 0.0};
  EXPECT_EQ(expected_gamma(100, zero), std::sqrt(expected_lambda_sq(100, zero).mean));
}

TEST(Prediction, RejectsInapplicable) {
  EXPECT_THROW(expected_lambda_sq(100, MomentPair{0.0, 0.1}), TheoremInapplicable);
  EXPECT_THROW(expected_lambda_sq(100, MomentPair{-0.1, 0.1}), TheoremInapplicable);
  EXPECT_THROW(expected_lambda_sq(101, MomentPair{0.5, 0.1}), InvalidInput);
  EXPECT_THROW(expected_lambda_sq(2, MomentPair{0.5, 0.1}), InvalidInput);
}

}  // namespace
}  // namespace hmf
