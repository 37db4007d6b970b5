#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hmf/equilibria.hpp"
#include "hmf/integrator.hpp"

namespace hmflab {

using Json = nlohmann::ordered_json;

// Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EquilibriumKindId {
  kQuietStart,
  kBicluster,
  kRandomUniformBicluster,
  kRandomGaussianBicluster,
  kCustomSymmetric,
};

std::string kind_name(EquilibriumKindId kind);

struct EquilibriumParams {
  EquilibriumKindId kind = EquilibriumKindId::kQuietStart;
  std::size_t n = 1000;
  std::optional<double> delta_theta;
  std::optional<double> sigma_theta;
  std::optional<std::string> density;
  // Quiet start only: momenta from a waterbag of temperature T.
  std::optional<double> temperature;
};

struct RunConfig {
  EquilibriumParams equilibrium;
  std::optional<double> epsilon;  // unset: 0.01 * 2 pi / n
  hmf::IntegratorConfig integrator{0.05, 40.0, 1};
  std::uint64_t seed = 0;
  std::string timeseries = "timeseries.csv";
  std::string summary = "summary.json";
  std::vector<std::string> predictors{"exact", "rmt", "vlasov"};
  std::optional<double> saturation_t_from;  // unset: t_end / 2

  // Seeds of the three random inputs of a run, all derived from `seed`.
  std::uint64_t equilibrium_seed() const;
  std::uint64_t perturbation_seed() const;
  std::uint64_t momentum_seed() const;

  double resolved_epsilon() const;
  double resolved_t_from() const;
  hmf::EquilibriumSpec equilibrium_spec() const;

  // Throws ConfigError.
  void validate() const;
};

enum class SweepAxis { kDeltaTheta, kSigmaTheta, kN, kTemperature };

std::string axis_name(SweepAxis axis);

struct SweepConfig {
  RunConfig base;
  SweepAxis axis = SweepAxis::kDeltaTheta;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  // Set when seeds were expanded from base.seed rather than listed.
  std::optional<std::size_t> ensemble;
  std::string summary = "sweep.json";
  std::string table = "sweep.csv";

  // The run of one (value, seed) cell.
  RunConfig cell(double value, std::uint64_t seed) const;

  void validate() const;
};

// Command-line values that take precedence over the config document.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<std::size_t> n;
  std::optional<double> delta_theta;
  std::optional<double> sigma_theta;
  std::optional<double> epsilon;
  std::optional<double> temperature;
  std::optional<std::string> equilibrium;
  std::optional<std::string> density;
};

// seeds[i] = derive_seed(base, i).
std::vector<std::uint64_t> expand_seeds(std::uint64_t base, std::size_t count);

Json read_json_file(const std::string& path);

RunConfig parse_run_config(const Json& doc);
SweepConfig parse_sweep_config(const Json& doc);

void apply_overrides(RunConfig& config, const Overrides& o);
void apply_overrides(SweepConfig& config, const Overrides& o);

Json to_json(const RunConfig& config);
Json to_json(const SweepConfig& config);

}  // namespace hmflab
