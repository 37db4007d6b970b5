#include "hmf/linstab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hmf/error.hpp"
#include "hmf/numeric.hpp"

namespace hmf {

double DenseMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

StabilityMatrix build_stability_matrix(const ParticleState& state) {
  const auto theta = state.theta();
  const std::size_t n = theta.size();
  if (n == 0) throw InvalidInput("empty particle state");
  StabilityMatrix a{DenseMatrix(n), state.is_cold()};
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.entries(i, i) = inv_n;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::cos(theta[i] - theta[j]) * inv_n;
      a.entries(i, j) = v;
      a.entries(j, i) = v;
    }
  }
  return a;
}

namespace {

GrowthRateResult from_eigenvalues(double top, double second, EigenMethod method) {
  GrowthRateResult r;
  r.lambda_sq = top;
  r.lambda_sq_minor = second;
  r.gamma = std::sqrt(std::max(top, 0.0));
  r.method = method;
  return r;
}

}  // namespace

GrowthRateResult exact_growth_rate(const ParticleState& state) {
  const auto theta = state.theta();
  const std::size_t n = theta.size();
  if (n == 0) throw InvalidInput("empty particle state");
  // Gram matrix G = (1/N)[[c.c, c.s], [c.s, s.s]] has trace 1 and eigenvalues
  // 1/2 +- |sum exp(2 i theta)| / (2N), since c.c - s.s = sum cos 2 theta and
  // 2 c.s = sum sin 2 theta.
  double c2 = 0.0;
  double s2 = 0.0;
  for (double t : theta) {
    c2 += std::cos(2.0 * t);
    s2 += std::sin(2.0 * t);
  }
  const double dn = static_cast<double>(n);
  const double half_gap = 0.5 * std::hypot(c2, s2) / dn;
  return from_eigenvalues(0.5 + half_gap, 0.5 - half_gap, EigenMethod::kRank2Gram);
}

GrowthRateResult dense_growth_rate(const ParticleState& state) {
  const auto eig = dense_symmetric_eigen(build_stability_matrix(state).entries);
  const double second = eig.size() > 1 ? eig[1] : 0.0;
  return from_eigenvalues(eig.front(), second, EigenMethod::kDenseJacobi);
}

std::vector<double> dense_symmetric_eigen(const DenseMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return {};
  if (n > kMaxDenseEigenSize) throw InvalidInput("matrix too large for the dense eigen-solver");
  const double fro = matrix.frobenius_norm();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(matrix(i, j) - matrix(j, i)) > 1e-12 * fro) {
        throw InvalidInput("matrix is not symmetric");
      }
    }
  }
  DenseMatrix a = matrix;
  const double tol = 1e-12 * fro;

  auto max_offdiag = [&a, n] {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
    }
    return m;
  };

  bool converged = fro == 0.0;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    if (max_offdiag() < tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 0.01 * tol) continue;
        const double h = a(q, q) - a(p, p);
        const double theta = 0.5 * h / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double hh = a(r, q);
          const double rp = g - s * (hh + g * tau);
          const double rq = hh + s * (g - hh * tau);
          a(r, p) = rp;
          a(p, r) = rp;
          a(r, q) = rq;
          a(q, r) = rq;
        }
      }
    }
  }
  if (!converged && max_offdiag() >= tol) {
    throw ConvergenceFailure("Jacobi eigen-solver did not converge in 100 sweeps");
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// sqrt(0.5) is the correctly rounded value; 1.0 / sqrt(2.0) is one ulp low.
double gamma_quiet_start() noexcept { return std::sqrt(0.5); }

DenseMatrix toeplitz_cos_matrix(std::size_t m, double omega) {
  DenseMatrix t(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double k = static_cast<double>(i > j ? i - j : j - i);
      t(i, j) = std::cos(k * omega);
    }
  }
  return t;
}

std::pair<double, double> toeplitz_cos_eigen(std::size_t m, double omega) {
  if (m < 1) throw InvalidInput("Toeplitz order must be >= 1");
  const double so = std::sin(omega);
  if (std::abs(so) < kDegenerateSinThreshold) {
    throw DegenerateFrequency("sin(omega) vanishes; use the omega -> 0 limit");
  }
  const double dm = static_cast<double>(m);
  const double ratio = std::abs(std::sin(dm * omega) / so);
  return {0.5 * (dm + ratio), 0.5 * (dm - ratio)};
}

std::pair<double, double> toeplitz_cos_eigen_or_limit(std::size_t m, double omega) {
  try {
    return toeplitz_cos_eigen(m, omega);
  } catch (const DegenerateFrequency&) {
    const double dm = static_cast<double>(m);
    const double ratio = std::abs(dm * std::cos(dm * omega) / std::cos(omega));
    return {0.5 * (dm + ratio), 0.5 * (dm - ratio)};
  }
}

namespace {

void check_bicluster_args(std::size_t n, double delta_theta) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("n must be even and >= 2");
  if (!(delta_theta > 0.0) || delta_theta > 0.5 * kPi) {
    throw InvalidInput("delta_theta must lie in (0, pi/2]");
  }
}

}  // namespace

double gamma_bicluster(std::size_t n, double delta_theta) {
  check_bicluster_args(n, delta_theta);
  // Two antipodal particles: A has eigenvalues {1, 0} whatever delta_theta is.
  if (n == 2) return 1.0;
  if (delta_theta == 0.5 * kPi) return gamma_quiet_start();
  const double dn = static_cast<double>(n);
  return std::sqrt(0.5 + std::sin(2.0 * delta_theta) / (dn * std::sin(4.0 * delta_theta / dn)));
}

double gamma_bicluster_large_n(double delta_theta) {
  if (!(delta_theta >= 0.0) || delta_theta > 0.5 * kPi) {
    throw InvalidInput("delta_theta must lie in [0, pi/2]");
  }
  return std::sqrt(0.5 * (1.0 + sinc(2.0 * delta_theta)));
}

}  // namespace hmf
