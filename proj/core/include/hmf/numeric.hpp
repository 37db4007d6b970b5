#pragma once

#include <cmath>
#include <span>

#include "hmf/state.hpp"

namespace hmf {

// sin(x)/x with sinc(0) = 1.
inline double sinc(double x) noexcept {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

inline double sum(std::span<const double> xs, Summation mode = Summation::kPlain) {
  if (mode == Summation::kCompensated) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
  }
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc;
}

}  // namespace hmf
