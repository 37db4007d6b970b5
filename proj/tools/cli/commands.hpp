#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"
#include "hmf/integrator.hpp"
#include "hmf/state.hpp"

namespace hmflab {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

// Unperturbed initial state: the equilibrium, plus waterbag momenta for a
// warm quiet start.
hmf::ParticleState build_equilibrium(const RunConfig& config);

// Equilibrium plus the angular perturbation.
hmf::ParticleState build_initial_state(const RunConfig& config);

struct RunOutput {
  hmf::Trajectory trajectory;
  Json summary;
};

// Integrates one run and assembles its summary. Throws hmf::Error subclasses
// on numerical failure.
RunOutput execute_run(const RunConfig& config);

// Predictor records requested by config.predictors, keyed by name.
Json evaluate_predictors(const RunConfig& config, const hmf::ParticleState& equilibrium);

// One predictor ("exact", "rmt", "vlasov", "warm"). Inapplicable combinations
// come back with "status": "not_applicable".
Json evaluate_predictor(const std::string& name, const RunConfig& config,
                        const hmf::ParticleState& equilibrium);

int cmd_simulate(const RunConfig& config, const std::string& out_dir, std::ostream& err);
int cmd_sweep(const SweepConfig& config, const std::string& out_dir, int jobs,
              std::ostream& err);
int cmd_predict(const std::string& kind, const RunConfig& config, std::ostream& out,
                std::ostream& err);
int cmd_version(std::ostream& out);

// Full command-line entry point; `env_jobs` is the value of HMFLAB_JOBS, if set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const char* env_jobs);

}  // namespace hmflab
