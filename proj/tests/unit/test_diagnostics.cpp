#include <gtest/gtest.h>

#include <cmath>

#include "hmf/bessel.hpp"
#include "hmf/diagnostics.hpp"
#include "hmf/equilibria.hpp"
#include "hmf/error.hpp"
#include "hmf/integrator.hpp"

namespace hmf {
namespace {

struct Series {
  std::vector<double> t, m;
};

// Exponential at rate g from m0, saturating sharply at cap.
Series logistic(double g, double m0, double cap, double t_end, double dt) {
  Series s;
  for (double t = 0.0; t <= t_end + 1e-12; t += dt) {
    const double e = m0 * std::exp(g * t);
    s.t.push_back(t);
    s.m.push_back(e / std::pow(1.0 + std::pow(e / cap, 4.0), 0.25));
  }
  return s;
}

TEST(Fit, PureExponentialWithExplicitWindow) {
  Series s;
  for (int i = 0; i < 50; ++i) {
    s.t.push_back(0.1 * i);
    s.m.push_back(2e-3 * std::exp(0.9 * 0.1 * i));
  }
  const auto f = fit_growth_rate(s.t, s.m, TimeWindow{0.0, 10.0});
  EXPECT_NEAR(f.gamma, 0.9, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_LT(f.std_error, 1e-10);
  EXPECT_EQ(f.samples, 50u);
}

TEST(Fit, AutomaticWindowOnLogisticCurve) {
  const auto s = logistic(0.7, 1e-5, 0.6, 40.0, 0.05);
  const auto f = fit_growth_rate(s.t, s.m);
  EXPECT_NEAR(f.gamma, 0.7, 1e-3);
  EXPECT_GE(f.r_squared, kMinRSquared);
  EXPECT_GE(f.samples, kMinFitSamples);
  // The window stays inside the [10 M0, max/10] band.
  const double m_lo = 10 * s.m.front();
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    if (s.t[i] >= f.window.t_start && s.t[i] <= f.window.t_end) {
      EXPECT_GE(s.m[i], m_lo);
      EXPECT_LE(s.m[i], 0.06 * (1 + 1e-12));
    }
  }
}

TEST(Fit, AutomaticWindowIsDeterministic) {
  const auto s = logistic(0.5, 1e-4, 0.5, 60.0, 0.1);
  const auto a = fit_growth_rate(s.t, s.m);
  const auto b = fit_growth_rate(s.t, s.m);
  EXPECT_EQ(a.gamma, b.gamma);
  EXPECT_EQ(a.window.t_start, b.window.t_start);
  EXPECT_EQ(a.window.t_end, b.window.t_end);
}

TEST(Fit, FlatSeriesHasNoExponentialPhase) {
  std::vector<double> t, m;
  for (int i = 0; i < 100; ++i) {
    t.push_back(i);
    m.push_back(1e-3 * (1.0 + 0.1 * std::sin(i)));
  }
  EXPECT_THROW(fit_growth_rate(t, m), NoExponentialPhase);
  std::vector<double> zero(100, 0.0);
  EXPECT_THROW(fit_growth_rate(t, zero), NoExponentialPhase);
}

TEST(Fit, RejectsBadInput) {
  std::vector<double> t{0, 1, 2}, m{1, 2, 3};
  EXPECT_THROW(fit_growth_rate(t, m), InvalidInput);
  const auto s = logistic(0.7, 1e-5, 0.6, 10.0, 0.1);
  EXPECT_THROW(fit_growth_rate(s.t, s.m, TimeWindow{5.0, 5.0}), InvalidInput);
  EXPECT_THROW(fit_growth_rate(s.t, s.m, TimeWindow{5.0, 5.5}), InvalidInput);
  auto m2 = s.m;
  m2[20] = 0.0;
  EXPECT_THROW(fit_growth_rate(s.t, m2, TimeWindow{1.0, 4.0}), InvalidInput);
}

TEST(Fit, QuietStartSimulationRecoversRate) {
  const std::size_t n = 1000;
  const auto s0 = perturb(quiet_start(n), {PerturbationSpec::default_epsilon(n), 1});
  IntegratorConfig c;
  c.dt = 0.05;
  c.t_end = 40.0;
  const auto tr = evolve(s0, c);
  const auto f = fit_growth_rate(tr);
  EXPECT_NEAR(f.gamma, 1.0 / std::sqrt(2.0), 0.02 / std::sqrt(2.0));
}

TEST(Instantaneous, ExponentialHasConstantRate) {
  Series s;
  for (int i = 0; i < 200; ++i) {
    s.t.push_back(0.01 * i);
    s.m.push_back(std::exp(0.5 * 0.01 * i));
  }
  const auto g = instantaneous_growth(s.t, s.m);
  ASSERT_EQ(g.size(), 200u);
  for (std::size_t i = 1; i + 1 < g.size(); ++i) EXPECT_NEAR(g[i].rate, 0.5, 1e-5);
  EXPECT_NEAR(g.front().rate, 0.5, 3e-3);
  EXPECT_NEAR(growth_plateau(g, {0.5, 1.5}), 0.5, 1e-5);
  EXPECT_THROW(growth_plateau(g, {10.0, 11.0}), InvalidInput);
  std::vector<double> t2{0, 1}, m2{1, 2};
  EXPECT_THROW(instantaneous_growth(t2, m2), InvalidInput);
}

TEST(Equilibrium, ColdPrediction) {
  const auto p = equilibrium_prediction_cold();
  EXPECT_NEAR(p.m_eq, 0.6217825, 1e-6);
  EXPECT_NEAR(p.t_eq, 0.3866135, 1e-6);
  EXPECT_NEAR(p.beta, 2.58656, 1e-4);
  const double x = std::sqrt(p.beta);
  EXPECT_NEAR(bessel_i(1, x) / bessel_i(0, x), 1.0 / x, 1e-11);
  // Energy balance at U = 1/2: T/2 + (1 - M^2)/2.
  EXPECT_NEAR(0.5 * p.t_eq + 0.5 * (1.0 - p.m_eq * p.m_eq), 0.5, 1e-11);
}

TEST(Timescales, BounceFrequency) {
  const auto r = timescale_report(0.707, 0.64);
  EXPECT_NEAR(r.omega_b, 0.8, 1e-15);
  EXPECT_NEAR(r.ratio, 0.707 / 0.8, 1e-15);
  EXPECT_THROW(timescale_report(0.7, 0.0), InvalidInput);
  EXPECT_THROW(timescale_report(-0.1, 0.5), InvalidInput);
}

TEST(Saturation, MeanAndPopulationStdDev) {
  std::vector<Observables> obs;
  for (int i = 0; i < 10; ++i) {
    Observables o;
    o.t = i;
    o.m = i < 5 ? 0.0 : (i % 2 ? 0.7 : 0.5);
    obs.push_back(o);
  }
  const auto s = saturation_stats(obs, 5.0);
  EXPECT_EQ(s.samples, 5u);
  EXPECT_NEAR(s.mean, (0.7 * 3 + 0.5 * 2) / 5, 1e-15);
  EXPECT_NEAR(s.std_dev, std::sqrt((3 * 0.08 * 0.08 + 2 * 0.12 * 0.12) / 5), 1e-15);
  EXPECT_THROW(saturation_stats(obs, 20.0), InvalidInput);
  EXPECT_THROW(saturation_stats(obs, -1.0), InvalidInput);
}

}  // namespace
}  // namespace hmf
