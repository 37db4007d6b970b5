#include <gtest/gtest.h>

#include <cmath>

#include "hmf/bessel.hpp"
#include "hmf/error.hpp"
#include "oracles.hpp"

namespace hmf {
namespace {

struct Ref {
  double x, i0, i1;
};

// 30-digit reference values.
constexpr Ref kRefs[] = {
    {1.0, 1.26606587775200833, 0.56515910399248503},
    {5.0, 27.2398718236044469, 24.3356421424505272},
    {10.0, 2815.71662846625447, 2670.98830370125465},
    {15.0, 339649.373297913880, 328124.921970206397},
    {20.0, 43558282.5595535333, 42454973.3851277702},
    {50.0, 2.93255378384933633e20, 2.90307859010355680e20},
};

TEST(Bessel, ReferenceValues) {
  for (const auto& r : kRefs) {
    EXPECT_NEAR(bessel_i(0, r.x) / r.i0, 1.0, 1e-12) << r.x;
    EXPECT_NEAR(bessel_i(1, r.x) / r.i1, 1.0, 1e-12) << r.x;
  }
}

TEST(Bessel, AtZero) {
  EXPECT_EQ(bessel_i(0, 0.0), 1.0);
  EXPECT_EQ(bessel_i(1, 0.0), 0.0);
}

TEST(Bessel, MatchesLongDoubleSeriesBelowCrossover) {
  for (double x = 0.01; x < kBesselCrossover; x += 0.37) {
    for (int order : {0, 1}) {
      const double ref = testing::series_bessel_i(order, x);
      EXPECT_NEAR(bessel_i(order, x) / ref, 1.0, 1e-13) << order << " " << x;
    }
  }
}

TEST(Bessel, BranchesAgreeAroundCrossover) {
  for (double x = 14.0; x <= 16.0; x += 0.125) {
    for (int order : {0, 1}) {
      const double s = bessel_i_series(order, x);
      const double a = bessel_i_asymptotic(order, x);
      EXPECT_NEAR(a / s, 1.0, 1e-12) << order << " " << x;
    }
  }
}

TEST(Bessel, RatioIsMonotoneAndBounded) {
  double prev = 0.0;
  for (double x = 0.1; x < 60.0; x += 0.1) {
    const double r = bessel_i(1, x) / bessel_i(0, x);
    EXPECT_GT(r, prev);
    EXPECT_LT(r, 1.0);
    prev = r;
  }
}

TEST(Bessel, RejectsBadArguments) {
  EXPECT_THROW(bessel_i(2, 1.0), InvalidInput);
  EXPECT_THROW(bessel_i(0, -1.0), InvalidInput);
  EXPECT_THROW(bessel_i(0, NAN), InvalidInput);
  EXPECT_THROW(bessel_i_asymptotic(0, 0.0), InvalidInput);
}

}  // namespace
}  // namespace hmf
