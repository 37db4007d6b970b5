#pragma once

#include <cstdint>

namespace hmf {

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Mixes (seed, index) into an independent 64-bit seed. Used for per-particle
// substreams and for expanding one CLI seed into an ensemble of seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// xoshiro256** seeded through splitmix64. Output is identical on every
// platform; the distributions below are implemented here rather than taken
// from <random>, whose distributions are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  // Substream `stream` of `seed`: the generator for particle `stream`.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return Rng(derive_seed(seed, stream));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept;
  // Standard normal via the polar Marsaglia method.
  double normal() noexcept;

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hmf
