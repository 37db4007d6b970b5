#include "hmf/bessel.hpp"

#include <cmath>

#include "hmf/error.hpp"
#include "hmf/state.hpp"

namespace hmf {

namespace {

void check_args(int order, double x) {
  if (order != 0 && order != 1) throw InvalidInput("bessel_i supports orders 0 and 1");
  if (!(x >= 0.0)) throw InvalidInput("bessel_i is implemented for x >= 0");
}

}  // namespace

double bessel_i_series(int order, double x) {
  check_args(order, x);
  // sum_k (x/2)^(2k + order) / (k! (k + order)!); every term is positive.
  const double q = 0.25 * x * x;
  double term = order == 0 ? 1.0 : 0.5 * x;
  double acc = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    acc += term;
    if (term < 1e-17 * acc) break;
  }
  return acc;
}

double bessel_i_asymptotic(int order, double x) {
  check_args(order, x);
  if (x == 0.0) throw InvalidInput("asymptotic expansion needs x > 0");
  // e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k, truncated at the
  // smallest term.
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double acc = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) >= prev) break;
    acc += term;
    prev = std::abs(term);
    if (prev < 1e-17 * std::abs(acc)) break;
  }
  return std::exp(x) / std::sqrt(kTwoPi * x) * acc;
}

double bessel_i(int order, double x) {
  check_args(order, x);
  return x <= kBesselCrossover ? bessel_i_series(order, x) : bessel_i_asymptotic(order, x);
}

}  // namespace hmf
