#include <gtest/gtest.h>

#include <cmath>

#include "hmf/error.hpp"
#include "hmf/rng.hpp"
#include "hmf/state.hpp"
#include "oracles.hpp"

namespace hmf {
namespace {

ParticleState random_state(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> th(n), p(n);
  for (std::size_t i = 0; i < n; ++i) {
    th[i] = rng.uniform(-10.0, 10.0);
    p[i] = rng.uniform(-1.0, 1.0);
  }
  return ParticleState(th, p);
}

TEST(ParticleState, RejectsMismatchedOrEmpty) {
  EXPECT_THROW(ParticleState(std::vector<double>{}, std::vector<double>{}), InvalidInput);
  EXPECT_THROW(ParticleState({0.0, 1.0}, {0.0}), InvalidInput);
  EXPECT_THROW(ParticleState({NAN}, {0.0}), InvalidInput);
}

TEST(ParticleState, NormalizationIsIdempotentAndInRange) {
  for (double x : {-7.0, -kPi, 0.0, kPi, 3.0 * kPi, 1e3, -1e3}) {
    const double y = normalize_angle(x);
    EXPECT_GE(y, -kPi);
    EXPECT_LT(y, kPi);
    EXPECT_EQ(normalize_angle(y), y);
    EXPECT_NEAR(std::cos(x), std::cos(y), 1e-12);
    EXPECT_NEAR(std::sin(x), std::sin(y), 1e-12);
  }
}

TEST(Magnetization, QuietStartOfFourCancels) {
  const auto s = ParticleState::cold({0.0, kPi / 2, kPi, 3 * kPi / 2});
  const auto m = magnetization(s);
  EXPECT_NEAR(m.mx, 0.0, 1e-15);
  EXPECT_NEAR(m.my, 0.0, 1e-15);
  EXPECT_NEAR(m.m, 0.0, 1e-15);
}

TEST(Magnetization, AlignedStateIsFullyMagnetized) {
  const auto m = magnetization(ParticleState::cold(std::vector<double>(7, 0.0)));
  EXPECT_EQ(m.mx, 1.0);
  EXPECT_EQ(m.my, 0.0);
  EXPECT_EQ(m.m, 1.0);
}

TEST(Magnetization, TwoParticles) {
  const auto m = magnetization(ParticleState::cold({0.0, kPi / 2}));
  EXPECT_NEAR(m.mx, 0.5, 1e-16);
  EXPECT_NEAR(m.my, 0.5, 1e-16);
  EXPECT_NEAR(m.m, 0.70710678118654752, 1e-15);
}

TEST(Magnetization, DeterministicAndModulusExact) {
  const auto s = random_state(1000, 3);
  const auto a = magnetization(s);
  const auto b = magnetization(s);
  EXPECT_EQ(a.mx, b.mx);
  EXPECT_EQ(a.my, b.my);
  EXPECT_EQ(a.m, std::sqrt(a.mx * a.mx + a.my * a.my));
  EXPECT_LE(a.m, 1.0);
}

TEST(Magnetization, CompensatedAgreesWithPlain) {
  const auto s = random_state(5000, 4);
  const auto a = magnetization(s, Summation::kPlain);
  const auto b = magnetization(s, Summation::kCompensated);
  EXPECT_NEAR(a.mx, b.mx, 1e-13);
  EXPECT_NEAR(a.my, b.my, 1e-13);
}

TEST(Magnetization, InvariantUnderTwoPiShiftAndCovariantUnderRotation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_state(64 + seed, seed);
    const auto base = magnetization(s);
    std::vector<double> shifted(s.theta().begin(), s.theta().end());
    for (double& t : shifted) t += kTwoPi;
    const auto m2 = magnetization(ParticleState::cold(shifted));
    EXPECT_NEAR(m2.mx, base.mx, 1e-13);
    EXPECT_NEAR(m2.my, base.my, 1e-13);

    const double phi = 0.1 + 0.3 * static_cast<double>(seed);
    std::vector<double> rotated(s.theta().begin(), s.theta().end());
    for (double& t : rotated) t += phi;
    const auto m3 = magnetization(ParticleState::cold(rotated));
    EXPECT_NEAR(m3.m, base.m, 1e-13);
    EXPECT_NEAR(m3.mx, base.mx * std::cos(phi) - base.my * std::sin(phi), 1e-13);
    EXPECT_NEAR(m3.my, base.mx * std::sin(phi) + base.my * std::cos(phi), 1e-13);
  }
}

TEST(Forces, ZeroWhenUnmagnetized) {
  const auto f = forces(ParticleState::cold({0.0, kPi}));
  // cos(pi) and sin(pi) carry roundoff, so M is ~1e-17 rather than 0.
  for (double x : f) EXPECT_NEAR(x, 0.0, 1e-16);
  const auto g = forces(ParticleState::cold({0.0, kPi / 2, kPi, 3 * kPi / 2}));
  for (double x : g) EXPECT_NEAR(x, 0.0, 1e-16);
}

TEST(Forces, TwoParticlesMatchDirectSum) {
  const auto s = ParticleState::cold({0.0, kPi / 2});
  const auto f = forces(s);
  const auto d = testing::direct_forces(s.theta());
  EXPECT_NEAR(f[0], 0.5, 1e-15);
  EXPECT_NEAR(f[1], -0.5, 1e-15);
  EXPECT_NEAR(f[0], d[0], 1e-15);
  EXPECT_NEAR(f[1], d[1], 1e-15);
}

TEST(Forces, SingleParticleFeelsNothing) {
  EXPECT_EQ(forces(ParticleState::cold({1.234})).front(), 0.0);
}

TEST(Forces, MatchDirectDoubleSumAndSumToZero) {
  for (std::size_t n : {2u, 3u, 17u, 64u, 255u, 256u}) {
    const auto s = random_state(n, n);
    const auto f = forces(s);
    const auto d = testing::direct_forces(s.theta());
    double total = 0.0, scale = 0.0;
    for (double x : d) scale = std::max(scale, std::abs(x));
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(f[k], d[k], 1e-12 * std::max(scale, 1e-3)) << "n=" << n << " k=" << k;
      total += f[k];
    }
    EXPECT_LE(std::abs(total), 1e-12 * static_cast<double>(n));
  }
}

TEST(Energy, ColdUnmagnetizedIsOneHalf) {
  EXPECT_NEAR(energy_per_particle(ParticleState::cold({0.0, kPi / 2, kPi, 3 * kPi / 2})), 0.5,
              1e-16);
}

TEST(Energy, AlignedColdIsZero) {
  EXPECT_EQ(energy_per_particle(ParticleState::cold(std::vector<double>(5, 0.0))), 0.0);
}

TEST(Energy, TwoParticleExample) {
  const ParticleState s({0.0, kPi / 2}, {1.0, -1.0});
  EXPECT_NEAR(energy_per_particle(s), 0.75, 1e-15);
}

TEST(Momentum, ExactSums) {
  EXPECT_EQ(total_momentum(ParticleState::cold({0.0, 1.0})), 0.0);
  EXPECT_EQ(total_momentum(ParticleState({0, 0, 0}, {1.0, 2.0, -3.0})), 0.0);
  EXPECT_EQ(total_momentum(ParticleState({0, 0}, {0.5, 0.25})), 0.75);
}

TEST(Observables, EnergyIdentityHolds) {
  const auto s = random_state(300, 9);
  const auto o = observe(s, 1.5);
  EXPECT_EQ(o.t, 1.5);
  double kin = 0.0;
  for (double p : s.p()) kin += p * p;
  kin /= 2.0 * 300.0;
  EXPECT_NEAR(o.u, kin + 0.5 * (1.0 - o.m * o.m), 1e-15);
}

}  // namespace
}  // namespace hmf
