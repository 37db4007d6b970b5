#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "hmf/density.hpp"
#include "hmf/diagnostics.hpp"
#include "hmf/error.hpp"
#include "hmf/linstab.hpp"
#include "hmf/rmt.hpp"
#include "hmf/rng.hpp"
#include "hmf/version.hpp"
#include "hmf/vlasov.hpp"
#include "io.hpp"

namespace hmflab {

namespace {

Json not_applicable(const std::string& reason) {
  return {{"status", "not_applicable"}, {"reason", reason}};
}

Json error_record(const std::string& what) { return {{"status", "error"}, {"message", what}}; }

std::optional<hmf::AngularDensity> analytic_density(const RunConfig& c) {
  const auto& e = c.equilibrium;
  switch (e.kind) {
    case EquilibriumKindId::kQuietStart:
      return hmf::named_density("uniform").density;
    case EquilibriumKindId::kBicluster:
    case EquilibriumKindId::kRandomUniformBicluster:
      return hmf::antipodal_density(hmf::waterbag_density(*e.delta_theta));
    case EquilibriumKindId::kRandomGaussianBicluster:
      return hmf::antipodal_density(hmf::truncated_gaussian_density(*e.sigma_theta));
    case EquilibriumKindId::kCustomSymmetric:
      return hmf::named_density(*e.density).density;
  }
  return std::nullopt;
}

bool is_warm(const RunConfig& c) {
  return c.equilibrium.temperature && *c.equilibrium.temperature > 0.0;
}

Json exact_predictor(const RunConfig& c, const hmf::ParticleState& eq) {
  if (!eq.is_cold()) return not_applicable("the linearization needs a cold equilibrium");
  const auto r = hmf::exact_growth_rate(eq);
  Json j{{"status", "ok"},
         {"gamma", r.gamma},
         {"lambda_sq", r.lambda_sq},
         {"lambda_sq_minor", r.lambda_sq_minor}};
  const auto& e = c.equilibrium;
  if (e.kind == EquilibriumKindId::kQuietStart && e.n > 2) {
    j["closed_form"] = hmf::gamma_quiet_start();
  } else if (e.kind == EquilibriumKindId::kBicluster) {
    j["closed_form"] = hmf::gamma_bicluster(e.n, *e.delta_theta);
    j["large_n"] = hmf::gamma_bicluster_large_n(*e.delta_theta);
  }
  return j;
}

Json rmt_predictor(const RunConfig& c) {
  const auto& e = c.equilibrium;
  hmf::MomentPair m;
  if (e.kind == EquilibriumKindId::kRandomUniformBicluster) {
    if (*e.delta_theta >= 0.5 * hmf::kPi) {
      return not_applicable("uniform moments need delta_theta < pi/2");
    }
    m = hmf::moments_uniform(*e.delta_theta);
  } else if (e.kind == EquilibriumKindId::kRandomGaussianBicluster) {
    m = hmf::moments_gaussian(*e.sigma_theta);
  } else {
    return not_applicable("the random-matrix law applies to random biclusters only");
  }
  if (e.n < 4) return not_applicable("the random-matrix law needs n >= 4");
  try {
    const auto p = hmf::rmt_predict(e.n, m);
    return {{"status", "ok"},
            {"gamma", p.gamma_mean},
            {"mu", m.mu},
            {"sigma_sq", m.sigma_sq},
            {"lambda_sq_mean", p.lambda_sq_mean},
            {"lambda_sq_var", p.lambda_sq_var}};
  } catch (const hmf::TheoremInapplicable& ex) {
    return not_applicable(ex.what());
  }
}

Json roots_record(const hmf::DispersionRoots& r) {
  return {{"gamma", std::sqrt(std::max(-r.omega_sq_minus, 0.0))},
          {"n00", r.n00},
          {"abs_n02", std::abs(r.n02)},
          {"two_pi_abs_n02", hmf::kTwoPi * std::abs(r.n02)},
          {"omega_sq_plus", r.omega_sq_plus},
          {"omega_sq_minus", r.omega_sq_minus},
          {"admissible", r.admissible}};
}

Json vlasov_predictor(const RunConfig& c, const hmf::ParticleState& eq) {
  if (is_warm(c)) return not_applicable("the cold-fluid dispersion relation needs T = 0");
  Json j{{"status", "ok"}};
  const auto d = analytic_density(c);
  try {
    const Json rec = roots_record(hmf::dispersion_roots(hmf::DensityProfile(*d)));
    for (const auto& [k, v] : rec.items()) j[k] = v;
  } catch (const hmf::MagnetizedProfile& ex) {
    return not_applicable(ex.what());
  }
  try {
    j["sampled"] = roots_record(hmf::dispersion_roots(hmf::DensityProfile::from_state(eq)));
  } catch (const hmf::MagnetizedProfile& ex) {
    j["sampled"] = not_applicable(ex.what());
  }
  return j;
}

Json warm_predictor(const RunConfig& c) {
  if (c.equilibrium.kind != EquilibriumKindId::kQuietStart) {
    return not_applicable("the warm waterbag rate applies to the quiet start only");
  }
  const double t = c.equilibrium.temperature.value_or(0.0);
  const auto w = hmf::warm_waterbag_growth_rate(t);
  return {{"status", "ok"},
          {"gamma", w.gamma},
          {"temperature", t},
          {"linearly_stable", w.linearly_stable}};
}

Json fit_record(const hmf::Trajectory& tr) {
  try {
    const auto f = hmf::fit_growth_rate(tr);
    return {{"status", "ok"},
            {"gamma", f.gamma},
            {"std_error", f.std_error},
            {"t_start", f.window.t_start},
            {"t_end", f.window.t_end},
            {"r_squared", f.r_squared},
            {"samples", f.samples}};
  } catch (const hmf::NoExponentialPhase& ex) {
    return {{"status", "no_exponential_phase"}, {"message", ex.what()}};
  } catch (const hmf::InvalidInput& ex) {
    return {{"status", "no_exponential_phase"}, {"message", ex.what()}};
  }
}

struct Conservation {
  double energy_initial = 0.0;
  double max_rel_energy_drift = 0.0;
  double momentum_initial = 0.0;
  double max_abs_momentum_drift = 0.0;
};

Conservation conservation_of(const hmf::Trajectory& tr) {
  Conservation c;
  const auto& s = tr.samples;
  c.energy_initial = s.front().u;
  c.momentum_initial = s.front().p_total;
  const double scale = std::abs(c.energy_initial) > 0.0 ? std::abs(c.energy_initial) : 1.0;
  for (const auto& o : s) {
    c.max_rel_energy_drift = std::max(c.max_rel_energy_drift, std::abs(o.u - c.energy_initial) / scale);
    c.max_abs_momentum_drift =
        std::max(c.max_abs_momentum_drift, std::abs(o.p_total - c.momentum_initial));
  }
  return c;
}

Json conservation_record(const hmf::Trajectory& tr) {
  const auto c = conservation_of(tr);
  return {{"energy_initial", c.energy_initial},
          {"energy_final", tr.samples.back().u},
          {"max_relative_energy_drift", c.max_rel_energy_drift},
          {"momentum_initial", c.momentum_initial},
          {"max_abs_momentum_drift", c.max_abs_momentum_drift}};
}

Json saturation_record(const hmf::Trajectory& tr, double t_from) {
  const auto s = hmf::saturation_stats(tr, t_from);
  return {{"t_from", s.t_from}, {"mean", s.mean}, {"std_dev", s.std_dev}, {"samples", s.samples}};
}

// Numeric failures inside the library map to exit 3.
bool is_numerical(const std::exception& e) {
  return dynamic_cast<const hmf::NumericalBlowup*>(&e) ||
         dynamic_cast<const hmf::ConvergenceFailure*>(&e);
}

double mean_of(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc / static_cast<double>(x.size());
}

double std_error_of(const std::vector<double>& x) {
  const double m = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  const double n = static_cast<double>(x.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

hmf::ParticleState build_equilibrium(const RunConfig& c) {
  hmf::ParticleState s = hmf::make_equilibrium(c.equilibrium_spec());
  if (!is_warm(c)) return s;
  // Antipodal partners k and k + n/2 share a momentum, so free streaming
  // keeps M = 0 exactly.
  const std::size_t half = s.size() / 2;
  const double a = std::sqrt(3.0 * *c.equilibrium.temperature);
  auto p = s.p_mut();
  double mean = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    hmf::Rng rng = hmf::Rng::substream(c.momentum_seed(), k);
    p[k] = rng.uniform(-a, a);
    mean += p[k];
  }
  mean /= static_cast<double>(half);
  for (std::size_t k = 0; k < half; ++k) {
    p[k] -= mean;
    p[k + half] = p[k];
  }
  return s;
}

hmf::ParticleState build_initial_state(const RunConfig& c) {
  return hmf::perturb(build_equilibrium(c), {c.resolved_epsilon(), c.perturbation_seed()});
}

Json evaluate_predictor(const std::string& name, const RunConfig& c,
                        const hmf::ParticleState& eq) {
  if (name == "exact") return exact_predictor(c, eq);
  if (name == "rmt") return rmt_predictor(c);
  if (name == "vlasov") return vlasov_predictor(c, eq);
  if (name == "warm") return warm_predictor(c);
  throw ConfigError("unknown predictor '" + name + "'");
}

Json evaluate_predictors(const RunConfig& c, const hmf::ParticleState& eq) {
  Json j = Json::object();
  for (const auto& name : c.predictors) j[name] = evaluate_predictor(name, c, eq);
  return j;
}

RunOutput execute_run(const RunConfig& c) {
  const hmf::ParticleState eq = build_equilibrium(c);
  const hmf::ParticleState s0 =
      hmf::perturb(eq, {c.resolved_epsilon(), c.perturbation_seed()});
  RunOutput r;
  r.trajectory = hmf::evolve(s0, c.integrator);
  Json& j = r.summary;
  j["version"] = hmf::kVersion;
  j["config"] = to_json(c);
  j["fit"] = fit_record(r.trajectory);
  j["predictors"] = evaluate_predictors(c, eq);
  j["conservation"] = conservation_record(r.trajectory);
  j["saturation"] = saturation_record(r.trajectory, c.resolved_t_from());
  const double m_sat = j["saturation"]["mean"].get<double>();
  if (j["fit"]["status"] == "ok" && m_sat > 0.0 && m_sat <= 1.0) {
    const auto t = hmf::timescale_report(j["fit"]["gamma"].get<double>(), m_sat);
    j["timescales"] = {{"omega_b", t.omega_b}, {"gamma_over_omega_b", t.ratio}};
  }
  return r;
}

int cmd_simulate(const RunConfig& c, const std::string& out_dir, std::ostream& err) {
  RunOutput r;
  try {
    r = execute_run(c);
  } catch (const std::exception& e) {
    err << "hmflab: " << e.what() << '\n';
    return is_numerical(e) ? kExitNumerical : kExitConfig;
  }
  try {
    ensure_directory(out_dir);
    write_file(join_path(out_dir, c.timeseries), format_timeseries(r.trajectory.samples));
    write_file(join_path(out_dir, c.summary), r.summary.dump(2) + "\n");
  } catch (const IoError& e) {
    err << "hmflab: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

namespace {

struct CellResult {
  bool ok = false;
  std::string error;
  std::optional<double> gamma;  // unset when no exponential phase was found
  Conservation conservation;
  double saturation_mean = 0.0;
  Json predictors;
};

CellResult run_cell(const RunConfig& c) {
  CellResult out;
  try {
    const RunOutput r = execute_run(c);
    out.ok = true;
    if (r.summary["fit"]["status"] == "ok") out.gamma = r.summary["fit"]["gamma"].get<double>();
    out.conservation = conservation_of(r.trajectory);
    out.saturation_mean = r.summary["saturation"]["mean"].get<double>();
    out.predictors = r.summary["predictors"];
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Mean of predictors[name].gamma over the cells that report one.
std::optional<double> mean_predictor(const std::vector<const CellResult*>& cells,
                                     const std::string& name) {
  std::vector<double> g;
  for (const auto* c : cells) {
    if (!c->ok || !c->predictors.contains(name)) continue;
    const Json& p = c->predictors[name];
    if (p.value("status", "") == "ok") g.push_back(p["gamma"].get<double>());
  }
  if (g.empty()) return std::nullopt;
  return mean_of(g);
}

Json or_null(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

int cmd_sweep(const SweepConfig& sc, const std::string& out_dir, int jobs, std::ostream& err) {
  const std::size_t nv = sc.values.size(), ns = sc.seeds.size();
  std::vector<CellResult> results(nv * ns);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < results.size();) {
      results[i] = run_cell(sc.cell(sc.values[i / ns], sc.seeds[i % ns]));
    }
  };
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), results.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Rows follow ascending axis value; ties keep the configured order.
  std::vector<std::size_t> order(nv);
  for (std::size_t i = 0; i < nv; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sc.values[a] < sc.values[b]; });

  Json rows = Json::array();
  std::string table = "value,gamma_mean,gamma_std_error,runs_fitted,runs_failed";
  for (const auto& name : sc.base.predictors) table += "," + name;
  table += '\n';
  for (std::size_t vi : order) {
    std::vector<const CellResult*> cells;
    Json per_seed = Json::array();
    std::vector<double> gammas;
    std::size_t failed = 0;
    double max_e = 0.0, max_p = 0.0;
    std::vector<double> sat;
    for (std::size_t si = 0; si < ns; ++si) {
      const CellResult& r = results[vi * ns + si];
      cells.push_back(&r);
      Json cell{{"seed", sc.seeds[si]}};
      if (!r.ok) {
        ++failed;
        cell["error"] = r.error;
      } else {
        cell["gamma"] = or_null(r.gamma);
        if (r.gamma) gammas.push_back(*r.gamma);
        max_e = std::max(max_e, r.conservation.max_rel_energy_drift);
        max_p = std::max(max_p, r.conservation.max_abs_momentum_drift);
        sat.push_back(r.saturation_mean);
      }
      per_seed.push_back(cell);
    }
    // NaN marks "not available"; it becomes null in JSON and nan in CSV.
    const double g_mean = gammas.empty() ? std::nan("") : mean_of(gammas);
    const double g_se = gammas.size() < 2 ? std::nan("") : std_error_of(gammas);

    Json preds = Json::object();
    for (const auto& name : sc.base.predictors) {
      const CellResult* first = nullptr;
      for (const auto* c : cells) {
        if (c->ok) {
          first = c;
          break;
        }
      }
      Json p = first ? first->predictors[name] : Json(error_record("every run of this cell failed"));
      // The exact rate depends on the sampled equilibrium; report its mean.
      if (name == "exact" && first && p.value("status", "") == "ok" && ns > 1) {
        p["gamma_seed_mean"] = or_null(mean_predictor(cells, "exact"));
      }
      preds[name] = p;
    }

    Json row;
    row["value"] = sc.values[vi];
    row["fit"] = {{"gamma_mean", finite_or_null(g_mean)},
                  {"gamma_std_error", finite_or_null(g_se)},
                  {"runs_fitted", gammas.size()},
                  {"runs_failed", failed},
                  {"per_seed", per_seed}};
    row["predictors"] = preds;
    row["conservation"] = {{"max_relative_energy_drift", max_e}, {"max_abs_momentum_drift", max_p}};
    row["saturation"] = {{"mean", sat.empty() ? Json(nullptr) : Json(mean_of(sat))}};
    rows.push_back(row);

    table += format_double(sc.values[vi]);
    table += "," + format_double(g_mean);
    table += "," + format_double(g_se);
    table += "," + std::to_string(gammas.size()) + "," + std::to_string(failed);
    for (const auto& name : sc.base.predictors) {
      const Json& p = preds[name];
      const std::string key = name == "exact" && p.contains("gamma_seed_mean") ? "gamma_seed_mean" : "gamma";
      table += ",";
      table += p.value("status", "") == "ok" && p[key].is_number() ? format_double(p[key].get<double>())
                                                                   : std::string("nan");
    }
    table += '\n';
  }

  Json doc;
  doc["version"] = hmf::kVersion;
  doc["config"] = to_json(sc);
  doc["rows"] = rows;
  try {
    ensure_directory(out_dir);
    write_file(join_path(out_dir, sc.table), table);
    write_file(join_path(out_dir, sc.summary), doc.dump(2) + "\n");
  } catch (const IoError& e) {
    err << "hmflab: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_predict(const std::string& kind, const RunConfig& c, std::ostream& out,
                std::ostream& err) {
  Json doc;
  doc["version"] = hmf::kVersion;
  doc["kind"] = kind;
  Json cfg = to_json(c);
  doc["config"] = {{"seed", cfg["seed"]}, {"equilibrium", cfg["equilibrium"]}};
  try {
    const hmf::ParticleState eq = build_equilibrium(c);
    Json r = evaluate_predictor(kind, c, eq);
    if (r.value("status", "") != "ok") {
      err << "hmflab: predictor '" << kind << "' is not applicable: "
          << r.value("reason", std::string()) << '\n';
      return kExitConfig;
    }
    r.erase("status");
    doc["result"] = r;
  } catch (const std::exception& e) {
    err << "hmflab: " << e.what() << '\n';
    return is_numerical(e) ? kExitNumerical : kExitConfig;
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_version(std::ostream& out) {
  out << "hmflab " << hmf::kVersion << '\n';
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const char* env_jobs) {
  CLI::App app{"HMF model simulator and linear-stability toolkit", "hmflab"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  Overrides o;
  int jobs = 1;
  std::string predict_kind;

  auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--config", config_path, "JSON config file");
    if (with_out) sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--seed", o.seed, "Base seed (64-bit)");
    sub->add_option("--dt", o.dt, "Time step");
    sub->add_option("--t-end", o.t_end, "Integration horizon");
    sub->add_option("--n", o.n, "Number of particles");
    sub->add_option("--delta-theta", o.delta_theta, "Bicluster half-width");
    sub->add_option("--sigma-theta", o.sigma_theta, "Gaussian cluster width");
    sub->add_option("--epsilon", o.epsilon, "Perturbation amplitude");
    sub->add_option("--equilibrium", o.equilibrium, "Equilibrium kind");
    sub->add_option("--density", o.density, "Named density for custom_symmetric");
    sub->add_option("--temperature", o.temperature, "Waterbag temperature of a warm quiet start");
  };
  auto* sim = app.add_subcommand("simulate", "Integrate one run");
  add_common(sim, true);
  sim->add_option("--jobs", jobs, "Accepted for symmetry; a run is single-threaded");
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep with seed ensembles");
  add_common(sweep, true);
  auto* jobs_opt = sweep->add_option("--jobs", jobs, "Concurrent sweep cells");
  auto* pred = app.add_subcommand("predict", "Evaluate a theory without simulating");
  pred->add_option("kind", predict_kind, "exact | rmt | vlasov | warm")->required();
  add_common(pred, false);
  app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "hmflab: " << e.what() << '\n';
    return kExitConfig;
  }

  if (app.got_subcommand("version")) return cmd_version(out);

  if (!jobs_opt->count() && env_jobs && *env_jobs) {
    char* end = nullptr;
    const long v = std::strtol(env_jobs, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) {
      err << "hmflab: HMFLAB_JOBS must be an integer in [1, 4096]\n";
      return kExitConfig;
    }
    jobs = static_cast<int>(v);
  }
  if (jobs < 1) {
    err << "hmflab: --jobs must be >= 1\n";
    return kExitConfig;
  }

  try {
    Json doc = Json::object();
    if (!config_path.empty()) doc = read_json_file(config_path);
    if (app.got_subcommand("sweep")) {
      SweepConfig sc = parse_sweep_config(doc);
      apply_overrides(sc, o);
      sc.validate();
      return cmd_sweep(sc, out_dir, jobs, err);
    }
    if (doc.contains("sweep")) throw ConfigError("a sweep section needs the sweep subcommand");
    RunConfig rc = parse_run_config(doc);
    apply_overrides(rc, o);
    if (app.got_subcommand("predict")) {
      if (predict_kind != "exact" && predict_kind != "rmt" && predict_kind != "vlasov" &&
          predict_kind != "warm") {
        throw ConfigError("predict kind must be exact, rmt, vlasov or warm");
      }
      rc.validate();
      return cmd_predict(predict_kind, rc, out, err);
    }
    rc.validate();
    return cmd_simulate(rc, out_dir, err);
  } catch (const ConfigError& e) {
    err << "hmflab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "hmflab: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace hmflab
