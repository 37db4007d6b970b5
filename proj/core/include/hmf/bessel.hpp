#pragma once

namespace hmf {

// Crossover between the power series and the large-x asymptotic expansion.
// The asymptotic series cannot beat a relative error of about exp(-2x), so
// the switch sits where that is below 1e-12.
inline constexpr double kBesselCrossover = 15.0;

// Modified Bessel function of the first kind, order 0 or 1, x >= 0.
double bessel_i(int order, double x);

// Both branches, exposed so their agreement can be checked directly.
double bessel_i_series(int order, double x);
double bessel_i_asymptotic(int order, double x);

}  // namespace hmf
