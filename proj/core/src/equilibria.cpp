#include "hmf/equilibria.hpp"

#include <cmath>
#include <type_traits>

#include "hmf/density.hpp"
#include "hmf/error.hpp"
#include "hmf/rng.hpp"

namespace hmf {

namespace {

void require_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("bicluster states need an even n >= 2");
}

void check_delta_theta(double delta_theta) {
  if (!(delta_theta > 0.0) || delta_theta > 0.5 * kPi) {
    throw InvalidInput("delta_theta must lie in (0, pi/2]");
  }
}

void check_sigma_theta(double sigma_theta) {
  if (!(sigma_theta > 0.0) || !std::isfinite(sigma_theta)) {
    throw InvalidInput("sigma_theta must be positive");
  }
}

}  // namespace

void EquilibriumSpec::validate() const {
  if (n < 2) throw InvalidInput("equilibrium needs n >= 2");
  std::visit(
      [this](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, kind::Bicluster> ||
                      std::is_same_v<K, kind::RandomUniformBicluster>) {
          require_even(n);
          check_delta_theta(k.delta_theta);
        } else if constexpr (std::is_same_v<K, kind::RandomGaussianBicluster>) {
          require_even(n);
          check_sigma_theta(k.sigma_theta);
        } else if constexpr (std::is_same_v<K, kind::CustomSymmetric>) {
          const auto& d = named_density(k.density_id);
          if (n % d.symmetry != 0) {
            throw InvalidInput("n must be a multiple of " + std::to_string(d.symmetry) +
                               " for density '" + d.id + "'");
          }
        }
      },
      kind);
}

bool EquilibriumSpec::is_random() const noexcept {
  return !std::holds_alternative<kind::QuietStart>(kind) &&
         !std::holds_alternative<kind::Bicluster>(kind);
}

double PerturbationSpec::default_epsilon(std::size_t n) noexcept {
  return 0.01 * kTwoPi / static_cast<double>(n);
}

double PerturbationSpec::max_epsilon(std::size_t n) noexcept {
  return 0.1 * kTwoPi / static_cast<double>(n);
}

ParticleState quiet_start(std::size_t n) {
  if (n < 2) throw InvalidInput("quiet start needs n >= 2");
  std::vector<double> theta(n);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 1; k <= n; ++k) theta[k - 1] = kTwoPi * static_cast<double>(k) / dn;
  return ParticleState::cold(std::move(theta));
}

ParticleState bicluster(std::size_t n, double delta_theta) {
  require_even(n);
  check_delta_theta(delta_theta);
  const std::size_t half = n / 2;
  const double dn = static_cast<double>(n);
  std::vector<double> theta(n);
  for (std::size_t k = 1; k <= half; ++k) {
    const double t = -delta_theta + 4.0 * static_cast<double>(k) * delta_theta / dn;
    theta[k - 1] = t;
    theta[half + k - 1] = t + kPi;
  }
  return ParticleState::cold(std::move(theta));
}

namespace {

double draw(Rng& rng, const UniformAngles& d) {
  return rng.uniform(-d.delta_theta, d.delta_theta);
}

double draw(Rng& rng, const TruncatedGaussianAngles& d) {
  const double half = 0.5 * kPi;
  for (;;) {
    const double x = d.sigma_theta * rng.normal();
    if (std::abs(x) <= half) return x;
  }
}

}  // namespace

ParticleState random_sym_bicluster(std::size_t n, const ClusterDistribution& dist,
                                   std::uint64_t seed) {
  require_even(n);
  std::visit(
      [](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, UniformAngles>) {
          check_delta_theta(d.delta_theta);
        } else {
          check_sigma_theta(d.sigma_theta);
        }
      },
      dist);
  const std::size_t half = n / 2;
  std::vector<double> theta(n);
  for (std::size_t k = 0; k < half; ++k) {
    Rng rng = Rng::substream(seed, k);
    const double t = std::visit([&rng](const auto& d) { return draw(rng, d); }, dist);
    theta[k] = t;
    theta[half + k] = t + kPi;
  }
  return ParticleState::cold(std::move(theta));
}

ParticleState custom_symmetric(std::size_t n, const std::string& density_id,
                               std::uint64_t seed) {
  const NamedDensity& nd = named_density(density_id);
  const std::size_t k = nd.symmetry;
  if (n < 2 || n % k != 0) {
    throw InvalidInput("n must be a positive multiple of " + std::to_string(k));
  }
  const std::size_t base = n / k;
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < base; ++i) {
    Rng rng = Rng::substream(seed, i);
    double t;
    for (;;) {
      t = rng.uniform(-kPi, kPi);
      if (rng.uniform() * nd.density.pdf_max <= nd.density.pdf(t)) break;
    }
    for (std::size_t j = 0; j < k; ++j) {
      theta[j * base + i] = t + kTwoPi * static_cast<double>(j) / static_cast<double>(k);
    }
  }
  return ParticleState::cold(std::move(theta));
}

ParticleState make_equilibrium(const EquilibriumSpec& spec) {
  spec.validate();
  return std::visit(
      [&spec](const auto& k) -> ParticleState {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, kind::QuietStart>) {
          return quiet_start(spec.n);
        } else if constexpr (std::is_same_v<K, kind::Bicluster>) {
          return bicluster(spec.n, k.delta_theta);
        } else if constexpr (std::is_same_v<K, kind::RandomUniformBicluster>) {
          return random_sym_bicluster(spec.n, UniformAngles{k.delta_theta}, spec.seed);
        } else if constexpr (std::is_same_v<K, kind::RandomGaussianBicluster>) {
          return random_sym_bicluster(spec.n, TruncatedGaussianAngles{k.sigma_theta},
                                      spec.seed);
        } else {
          return custom_symmetric(spec.n, k.density_id, spec.seed);
        }
      },
      spec.kind);
}

ParticleState perturb(const ParticleState& state, const PerturbationSpec& pert) {
  const std::size_t n = state.size();
  if (!(pert.epsilon >= 0.0) || pert.epsilon > PerturbationSpec::max_epsilon(n)) {
    throw InvalidInput("perturbation epsilon must lie in [0, 0.1 * 2 pi / n]");
  }
  ParticleState out = state;
  if (pert.epsilon == 0.0) return out;
  auto theta = out.theta_mut();
  for (std::size_t k = 0; k < n; ++k) {
    Rng rng = Rng::substream(pert.seed, k);
    theta[k] += rng.uniform(-pert.epsilon, pert.epsilon);
  }
  return out;
}

}  // namespace hmf
