#include <gtest/gtest.h>

#include <cmath>

#include "hmf/density.hpp"
#include "hmf/equilibria.hpp"
#include "hmf/error.hpp"
#include "hmf/linstab.hpp"
#include "hmf/numeric.hpp"
#include "hmf/vlasov.hpp"
#include "oracles.hpp"

namespace hmf {
namespace {

using cd = std::complex<double>;

// Truncated dispersion matrix on k, l in [-K, K]:
// M_kl = w2 delta_kl + k pi (delta_{l,1} n_{k-1} - delta_{l,-1} n_{k+1}).
std::vector<std::vector<cd>> dispersion_matrix(const DensityProfile& p, int big_k, cd w2) {
  const int dim = 2 * big_k + 1;
  std::vector<std::vector<cd>> m(dim, std::vector<cd>(dim));
  for (int k = -big_k; k <= big_k; ++k) {
    for (int l = -big_k; l <= big_k; ++l) {
      cd v = k == l ? w2 : cd{};
      if (l == 1) v += static_cast<double>(k) * kPi * fourier_coefficient(p, k - 1);
      if (l == -1) v -= static_cast<double>(k) * kPi * fourier_coefficient(p, k + 1);
      m[k + big_k][l + big_k] = v;
    }
  }
  return m;
}

TEST(Fourier, WaterbagBiclusterCoefficients) {
  for (double d : {0.3, kPi / 4, 1.2}) {
    const DensityProfile p(antipodal_density(waterbag_density(d)));
    EXPECT_NEAR(fourier_coefficient(p, 0).real(), 1.0 / kTwoPi, 1e-15);
    for (int m = 1; m <= 3; ++m) {
      EXPECT_NEAR(std::abs(fourier_coefficient(p, 2 * m - 1)), 0.0, 1e-13);
      const cd c = fourier_coefficient(p, 2 * m);
      EXPECT_NEAR(kTwoPi * c.real(), sinc(2.0 * m * d), 1e-12) << d << " " << m;
      EXPECT_NEAR(c.imag(), 0.0, 1e-13);
    }
  }
}

TEST(Fourier, NegativeIndexIsConjugate) {
  const DensityProfile p(named_density("cos2").density);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(std::abs(fourier_coefficient(p, -k) - std::conj(fourier_coefficient(p, k))), 0.0,
                1e-14);
  }
  const DensityProfile t(FourierTable{{1.0 / kTwoPi, 0.0, cd(0.05, 0.02)}});
  EXPECT_EQ(fourier_coefficient(t, -2), cd(0.05, -0.02));
  EXPECT_EQ(fourier_coefficient(t, 7), cd{});
}

TEST(Fourier, SampleOfQuietStart) {
  const auto p = DensityProfile::from_state(quiet_start(100));
  EXPECT_NEAR(std::abs(fourier_coefficient(p, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_coefficient(p, 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_coefficient(p, 100)), 1.0 / kTwoPi, 1e-13);
}

TEST(Dispersion, UniformGivesOneOverRootTwo) {
  const DensityProfile p(named_density("uniform").density);
  const auto r = dispersion_roots(p);
  EXPECT_NEAR(r.omega_sq_plus, -0.5, 1e-13);
  EXPECT_NEAR(r.omega_sq_minus, -0.5, 1e-13);
  EXPECT_TRUE(r.admissible);
  EXPECT_NEAR(vlasov_growth_rate(p), 1.0 / std::sqrt(2.0), 1e-13);
}

TEST(Dispersion, BiclusterMatchesLargeNLimit) {
  for (double d : {0.1, 0.5, kPi / 4, 1.3, 1.5}) {
    const DensityProfile p(antipodal_density(waterbag_density(d)));
    EXPECT_NEAR(vlasov_growth_rate(p), gamma_bicluster_large_n(d), 1e-12) << d;
  }
}

TEST(Dispersion, RootsAnnihilateTruncatedDeterminant) {
  for (const auto& id : named_density_ids()) {
    const DensityProfile p(named_density(id).density);
    const auto r = dispersion_roots(p);
    for (int big_k = 1; big_k <= 3; ++big_k) {
      for (double w2 : {r.omega_sq_plus, r.omega_sq_minus}) {
        const cd det = testing::cofactor_det(dispersion_matrix(p, big_k, w2));
        EXPECT_LT(std::abs(det), 1e-12) << id << " K=" << big_k;
      }
    }
  }
}

TEST(Dispersion, TruncationRecurrence) {
  const DensityProfile p(antipodal_density(waterbag_density(0.9)));
  for (cd w2 : {cd(-0.3, 0.0), cd(0.7, 0.2), cd(-1.1, -0.4)}) {
    double prev = std::abs(testing::cofactor_det(dispersion_matrix(p, 1, w2)));
    for (int big_k = 2; big_k <= 4; ++big_k) {
      const double cur = std::abs(testing::cofactor_det(dispersion_matrix(p, big_k, w2)));
      // |det| grows by |omega^4| = |w2|^2 per added pair of modes.
      EXPECT_NEAR(cur, std::norm(w2) * prev, 1e-12 * cur + 1e-15);
      prev = cur;
    }
  }
}

TEST(Dispersion, SampledStateMatchesExactFiniteNRate) {
  // For a force-free sample the rank-2 eigenvalue is exactly the dispersion
  // root evaluated on the empirical second harmonic.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = random_sym_bicluster(500, UniformAngles{1.0}, seed);
    EXPECT_NEAR(vlasov_growth_rate(DensityProfile::from_state(s)), exact_growth_rate(s).gamma,
                1e-12);
    const auto c = custom_symmetric(600, "cos3", seed);
    EXPECT_NEAR(vlasov_growth_rate(DensityProfile::from_state(c)), exact_growth_rate(c).gamma,
                1e-12);
  }
}

TEST(Dispersion, RejectsMagnetizedProfiles) {
  EXPECT_THROW(dispersion_roots(DensityProfile(waterbag_density(0.5))), MagnetizedProfile);
  EXPECT_THROW(dispersion_roots(DensityProfile(FourierTable{{1.0 / kTwoPi, cd(0.01, 0.0)}})),
               MagnetizedProfile);
  const auto aligned = ParticleState::cold({0.1, 0.2, 0.3});
  EXPECT_THROW(vlasov_growth_rate(DensityProfile::from_state(aligned)), MagnetizedProfile);
}

TEST(Dispersion, FlagsInadmissibleTables) {
  const auto r = dispersion_roots(DensityProfile(FourierTable{{1.0 / kTwoPi, 0.0, 0.3}}));
  EXPECT_FALSE(r.admissible);
  EXPECT_THROW(DensityProfile(FourierTable{{0.5}}), InvalidInput);
  EXPECT_THROW(DensityProfile(FourierTable{}), InvalidInput);
}

TEST(Warm, WaterbagRates) {
  EXPECT_NEAR(warm_waterbag_growth_rate(0.0).gamma, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(warm_waterbag_growth_rate(0.1).gamma, std::sqrt(0.2), 1e-15);
  const auto edge = warm_waterbag_growth_rate(1.0 / 6.0);
  EXPECT_EQ(edge.gamma, 0.0);
  EXPECT_TRUE(edge.linearly_stable);
  EXPECT_TRUE(warm_waterbag_growth_rate(0.3).linearly_stable);
  EXPECT_FALSE(warm_waterbag_growth_rate(0.16).linearly_stable);
  EXPECT_THROW(warm_waterbag_growth_rate(-0.01), InvalidInput);
}

}  // namespace
}  // namespace hmf
