#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "hmf/state.hpp"

namespace hmf {

namespace kind {
struct QuietStart {};
struct Bicluster {
  double delta_theta = 0.0;
};
struct RandomUniformBicluster {
  double delta_theta = 0.0;
};
struct RandomGaussianBicluster {
  double sigma_theta = 0.0;
};
// Named density sampled with an exact k-fold rotational symmetry, k >= 2,
// which forces M = 0.
struct CustomSymmetric {
  std::string density_id;
};
}  // namespace kind

using EquilibriumKind =
    std::variant<kind::QuietStart, kind::Bicluster, kind::RandomUniformBicluster,
                 kind::RandomGaussianBicluster, kind::CustomSymmetric>;

struct EquilibriumSpec {
  EquilibriumKind kind = kind::QuietStart{};
  std::size_t n = 0;
  std::uint64_t seed = 0;

  void validate() const;
  bool is_random() const noexcept;
};

struct PerturbationSpec {
  double epsilon = 0.0;
  std::uint64_t seed = 0;

  // 0.01 * 2 pi / n.
  static double default_epsilon(std::size_t n) noexcept;
  // 0.1 * 2 pi / n.
  static double max_epsilon(std::size_t n) noexcept;
};

// theta_k = 2 pi k / n, k = 1..n; p = 0.
ParticleState quiet_start(std::size_t n);

// Two antipodal uniform clusters of half-width delta_theta:
// theta_k = -dt + 4 k dt / n (k = 1..n/2), theta_{n/2+k} = theta_k + pi.
ParticleState bicluster(std::size_t n, double delta_theta);

struct UniformAngles {
  double delta_theta = 0.0;
};
struct TruncatedGaussianAngles {
  double sigma_theta = 0.0;
};
using ClusterDistribution = std::variant<UniformAngles, TruncatedGaussianAngles>;

// First n/2 angles i.i.d. from the distribution (particle k draws from its own
// substream of `seed`), last n/2 are exact pi shifts.
ParticleState random_sym_bicluster(std::size_t n, const ClusterDistribution& dist,
                                   std::uint64_t seed);

// Sample of a named density (see named_density()): n/k base angles drawn by
// rejection, each replicated under the k rotations by 2 pi j / k. n must be a
// multiple of the density's symmetry order k.
ParticleState custom_symmetric(std::size_t n, const std::string& density_id,
                               std::uint64_t seed);

ParticleState make_equilibrium(const EquilibriumSpec& spec);

// theta_k += u_k, u_k uniform on [-epsilon, epsilon].
ParticleState perturb(const ParticleState& state, const PerturbationSpec& pert);

}  // namespace hmf
