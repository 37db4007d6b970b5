#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hmf/state.hpp"

namespace hmf {

// Dense row-major square matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// A_ij = cos(theta*_i - theta*_j) / N for a cold force-free state. `cold`
// records whether the source state had all momenta zero; the linearization is
// only meaningful when it did.
struct StabilityMatrix {
  DenseMatrix entries;
  bool cold = true;

  std::size_t size() const noexcept { return entries.size(); }
};

enum class EigenMethod { kRank2Gram, kDenseJacobi, kClosedForm };

struct GrowthRateResult {
  double gamma = 0.0;      // sqrt(max(lambda_sq, 0))
  double lambda_sq = 0.0;  // largest eigenvalue of A
  double lambda_sq_minor = 0.0;  // second nonzero eigenvalue of A
  EigenMethod method = EigenMethod::kRank2Gram;

  // False when the top eigenvalue is <= 0 and gamma is reported as 0.
  bool unstable() const noexcept { return lambda_sq > 0.0; }
};

StabilityMatrix build_stability_matrix(const ParticleState& state);

// Nonzero eigenvalues of A from the 2x2 Gram matrix of the vectors
// c_i = cos(theta_i), s_i = sin(theta_i). O(N).
GrowthRateResult exact_growth_rate(const ParticleState& state);

// Same quantity via the dense Jacobi eigen-solver on A. O(N^3); oracle only.
GrowthRateResult dense_growth_rate(const ParticleState& state);

inline constexpr std::size_t kMaxDenseEigenSize = 2048;
inline constexpr int kMaxJacobiSweeps = 100;

// All eigenvalues of a symmetric matrix, sorted descending, by cyclic Jacobi
// rotations. Converged when every off-diagonal entry is below
// 1e-12 * ||A||_F.
std::vector<double> dense_symmetric_eigen(const DenseMatrix& matrix);

// sqrt(1/2), correctly rounded, with no finite-N correction.
double gamma_quiet_start() noexcept;

// m x m symmetric Toeplitz matrix with t_k = cos(k omega).
DenseMatrix toeplitz_cos_matrix(std::size_t m, double omega);

inline constexpr double kDegenerateSinThreshold = 1e-14;

// Its two nonzero eigenvalues (m +- sin(m omega)/sin(omega)) / 2, larger first. Throws
// DegenerateFrequency when |sin(omega)| < 1e-14.
std::pair<double, double> toeplitz_cos_eigen(std::size_t m, double omega);

// Same, but resolves the degenerate case with the analytic limit
// sin(m w)/sin(w) -> m cos(m w0)/cos(w0) at w0 = omega.
std::pair<double, double> toeplitz_cos_eigen_or_limit(std::size_t m, double omega);

// sqrt(1/2 + sin(2 dtheta) / (N sin(4 dtheta / N))); exactly sqrt(1/2) at
// dtheta = pi/2.
double gamma_bicluster(std::size_t n, double delta_theta);

// sqrt((1 + sinc(2 dtheta)) / 2).
double gamma_bicluster_large_n(double delta_theta);

}  // namespace hmf
