#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

#include "hmf/error.hpp"

namespace hmf::quad {

namespace detail {

// 10-point Gauss-Legendre rule on [-1, 1], positive half.
inline constexpr std::array<double, 5> kNodes = {
    0.1488743389816312108848260, 0.4333953941292471907992659,
    0.6794095682990244062343274, 0.8650633666889845107320967,
    0.9739065285171717200779640};
inline constexpr std::array<double, 5> kWeights = {
    0.2955242247147528701738930, 0.2692667193099963550912269,
    0.2190863625159820439955349, 0.1494513491505805931457763,
    0.0666713443086881375935688};

template <class F>
auto gauss10(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using T = decltype(f(a));
  T acc{};
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    const double dx = half * kNodes[i];
    acc += kWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

template <class F, class T>
T adapt(F& f, double a, double b, T whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const T left = gauss10(f, a, mid);
  const T right = gauss10(f, mid, b);
  const T halves = left + right;
  const double err = std::abs(halves - whole);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(halves);
  if (err <= tol || err <= floor) return halves;
  if (depth <= 0 || mid <= a || mid >= b) {
    throw ConvergenceFailure("adaptive Gauss-Legendre quadrature did not converge");
  }
  return adapt(f, a, mid, left, 0.5 * tol, depth - 1) +
         adapt(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline constexpr int kMaxDepth = 50;

// Adaptive Gauss-Legendre on [a, b] to absolute tolerance `abs_tol`: each
// panel is accepted when the 10-point rule on it and on its two halves agree.
// Works for real or complex integrands.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol) {
  using T = decltype(f(a));
  if (a == b) return T{};
  const T whole = detail::gauss10(f, a, b);
  return detail::adapt(f, a, b, whole, abs_tol, kMaxDepth);
}

// Sum of integrals over consecutive panels [edges[i], edges[i+1]]; the
// tolerance is shared in proportion to panel width.
template <class F>
auto integrate_segments(F&& f, std::span<const double> edges, double abs_tol) {
  using T = decltype(f(edges.front()));
  T acc{};
  if (edges.size() < 2) return acc;
  const double span = edges.back() - edges.front();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double w = edges[i + 1] - edges[i];
    if (w <= 0.0) continue;
    acc += integrate(f, edges[i], edges[i + 1], abs_tol * w / span);
  }
  return acc;
}

// Iterated integral of f(x, y) over [edges]^2.
template <class F>
auto integrate_2d(F&& f, std::span<const double> edges, double abs_tol) {
  const double span = edges.back() - edges.front();
  const double inner_tol = 0.5 * abs_tol / span;
  auto outer = [&](double x) {
    return integrate_segments([&](double y) { return f(x, y); }, edges, inner_tol);
  };
  return integrate_segments(outer, edges, 0.5 * abs_tol);
}

}  // namespace hmf::quad
