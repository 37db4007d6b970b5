#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hmf/density.hpp"
#include "hmf/error.hpp"
#include "hmf/rng.hpp"

namespace hmflab {

namespace {

struct KindEntry {
  EquilibriumKindId id;
  const char* name;
};

constexpr KindEntry kKinds[] = {
    {EquilibriumKindId::kQuietStart, "quiet_start"},
    {EquilibriumKindId::kBicluster, "bicluster"},
    {EquilibriumKindId::kRandomUniformBicluster, "random_uniform_bicluster"},
    {EquilibriumKindId::kRandomGaussianBicluster, "random_gaussian_bicluster"},
    {EquilibriumKindId::kCustomSymmetric, "custom_symmetric"},
};

EquilibriumKindId parse_kind(const std::string& s) {
  for (const auto& k : kKinds) {
    if (s == k.name) return k.id;
  }
  throw ConfigError("unknown equilibrium kind '" + s + "'");
}

void reject_unknown(const Json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double get_double(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + " must be finite");
  return x;
}

std::uint64_t get_u64(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigError(where + "." + key + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

void parse_equilibrium(const Json& j, EquilibriumParams& e) {
  const std::string w = "equilibrium";
  reject_unknown(j, w, {"kind", "n", "delta_theta", "sigma_theta", "density", "temperature"});
  if (j.contains("kind")) e.kind = parse_kind(get_string(j, "kind", w));
  if (j.contains("n")) e.n = static_cast<std::size_t>(get_u64(j, "n", w));
  if (j.contains("delta_theta")) e.delta_theta = get_double(j, "delta_theta", w);
  if (j.contains("sigma_theta")) e.sigma_theta = get_double(j, "sigma_theta", w);
  if (j.contains("density")) e.density = get_string(j, "density", w);
  if (j.contains("temperature")) e.temperature = get_double(j, "temperature", w);
}

void parse_integrator(const Json& j, hmf::IntegratorConfig& c) {
  const std::string w = "integrator";
  reject_unknown(j, w, {"dt", "t_end", "sample_every", "scheme", "summation"});
  if (j.contains("dt")) c.dt = get_double(j, "dt", w);
  if (j.contains("t_end")) c.t_end = get_double(j, "t_end", w);
  if (j.contains("sample_every")) {
    c.sample_every = static_cast<std::int64_t>(get_u64(j, "sample_every", w));
  }
  if (j.contains("scheme")) {
    const std::string s = get_string(j, "scheme", w);
    if (s == "yoshida4") {
      c.scheme = hmf::Scheme::kYoshida4;
    } else if (s == "leapfrog2") {
      c.scheme = hmf::Scheme::kLeapfrog2;
    } else {
      throw ConfigError("integrator.scheme must be 'yoshida4' or 'leapfrog2'");
    }
  }
  if (j.contains("summation")) {
    const std::string s = get_string(j, "summation", w);
    if (s == "plain") {
      c.summation = hmf::Summation::kPlain;
    } else if (s == "compensated") {
      c.summation = hmf::Summation::kCompensated;
    } else {
      throw ConfigError("integrator.summation must be 'plain' or 'compensated'");
    }
  }
}

const std::set<std::string> kRunKeys{"seed",       "equilibrium", "perturbation", "integrator",
                                     "outputs",    "predictors",  "saturation"};

void parse_run_fields(const Json& doc, RunConfig& c) {
  if (doc.contains("seed")) c.seed = get_u64(doc, "seed", "config");
  if (doc.contains("equilibrium")) parse_equilibrium(doc["equilibrium"], c.equilibrium);
  if (doc.contains("perturbation")) {
    const Json& p = doc["perturbation"];
    reject_unknown(p, "perturbation", {"epsilon"});
    if (p.contains("epsilon")) c.epsilon = get_double(p, "epsilon", "perturbation");
  }
  if (doc.contains("integrator")) parse_integrator(doc["integrator"], c.integrator);
  if (doc.contains("outputs")) {
    const Json& o = doc["outputs"];
    reject_unknown(o, "outputs", {"timeseries", "summary"});
    if (o.contains("timeseries")) c.timeseries = get_string(o, "timeseries", "outputs");
    if (o.contains("summary")) c.summary = get_string(o, "summary", "outputs");
  }
  if (doc.contains("predictors")) {
    const Json& p = doc["predictors"];
    if (!p.is_array()) throw ConfigError("predictors must be an array of names");
    c.predictors.clear();
    for (const auto& v : p) {
      if (!v.is_string()) throw ConfigError("predictors must be an array of names");
      c.predictors.push_back(v.get<std::string>());
    }
  }
  if (doc.contains("saturation")) {
    const Json& s = doc["saturation"];
    reject_unknown(s, "saturation", {"t_from"});
    if (s.contains("t_from")) c.saturation_t_from = get_double(s, "t_from", "saturation");
  }
}

SweepAxis parse_axis(const std::string& s) {
  if (s == "delta_theta") return SweepAxis::kDeltaTheta;
  if (s == "sigma_theta") return SweepAxis::kSigmaTheta;
  if (s == "n") return SweepAxis::kN;
  if (s == "T") return SweepAxis::kTemperature;
  throw ConfigError("sweep.axis must be one of delta_theta, sigma_theta, n, T");
}

void set_axis(RunConfig& c, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::kDeltaTheta:
      c.equilibrium.delta_theta = value;
      break;
    case SweepAxis::kSigmaTheta:
      c.equilibrium.sigma_theta = value;
      break;
    case SweepAxis::kN:
      c.equilibrium.n = static_cast<std::size_t>(value);
      break;
    case SweepAxis::kTemperature:
      c.equilibrium.temperature = value;
      break;
  }
}

template <class F>
auto translate(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

}  // namespace

std::string kind_name(EquilibriumKindId kind) {
  for (const auto& k : kKinds) {
    if (k.id == kind) return k.name;
  }
  return "unknown";
}

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kDeltaTheta:
      return "delta_theta";
    case SweepAxis::kSigmaTheta:
      return "sigma_theta";
    case SweepAxis::kN:
      return "n";
    case SweepAxis::kTemperature:
      return "T";
  }
  return "unknown";
}

std::uint64_t RunConfig::equilibrium_seed() const { return hmf::derive_seed(seed, 0); }
std::uint64_t RunConfig::perturbation_seed() const { return hmf::derive_seed(seed, 1); }
std::uint64_t RunConfig::momentum_seed() const { return hmf::derive_seed(seed, 2); }

double RunConfig::resolved_epsilon() const {
  return epsilon ? *epsilon : hmf::PerturbationSpec::default_epsilon(equilibrium.n);
}

double RunConfig::resolved_t_from() const {
  return saturation_t_from ? *saturation_t_from : 0.5 * integrator.t_end;
}

hmf::EquilibriumSpec RunConfig::equilibrium_spec() const {
  hmf::EquilibriumSpec s;
  s.n = equilibrium.n;
  s.seed = equilibrium_seed();
  const auto& e = equilibrium;
  switch (e.kind) {
    case EquilibriumKindId::kQuietStart:
      s.kind = hmf::kind::QuietStart{};
      break;
    case EquilibriumKindId::kBicluster:
      s.kind = hmf::kind::Bicluster{e.delta_theta.value_or(0.0)};
      break;
    case EquilibriumKindId::kRandomUniformBicluster:
      s.kind = hmf::kind::RandomUniformBicluster{e.delta_theta.value_or(0.0)};
      break;
    case EquilibriumKindId::kRandomGaussianBicluster:
      s.kind = hmf::kind::RandomGaussianBicluster{e.sigma_theta.value_or(0.0)};
      break;
    case EquilibriumKindId::kCustomSymmetric:
      s.kind = hmf::kind::CustomSymmetric{e.density.value_or("")};
      break;
  }
  return s;
}

void RunConfig::validate() const {
  const auto& e = equilibrium;
  const std::string k = kind_name(e.kind);
  const bool uses_dt = e.kind == EquilibriumKindId::kBicluster ||
                       e.kind == EquilibriumKindId::kRandomUniformBicluster;
  const bool uses_sigma = e.kind == EquilibriumKindId::kRandomGaussianBicluster;
  const bool uses_density = e.kind == EquilibriumKindId::kCustomSymmetric;
  const bool uses_t = e.kind == EquilibriumKindId::kQuietStart;
  if (uses_dt != e.delta_theta.has_value()) {
    throw ConfigError(uses_dt ? "equilibrium kind " + k + " needs delta_theta"
                              : "delta_theta does not apply to equilibrium kind " + k);
  }
  if (uses_sigma != e.sigma_theta.has_value()) {
    throw ConfigError(uses_sigma ? "equilibrium kind " + k + " needs sigma_theta"
                                 : "sigma_theta does not apply to equilibrium kind " + k);
  }
  if (uses_density != e.density.has_value()) {
    throw ConfigError(uses_density ? "equilibrium kind " + k + " needs density"
                                   : "density does not apply to equilibrium kind " + k);
  }
  if (e.temperature && !uses_t) {
    throw ConfigError("temperature applies only to the quiet start");
  }
  if (e.n > 100'000'000) throw ConfigError("equilibrium.n is too large");
  try {
    equilibrium_spec().validate();
    integrator.validate();
  } catch (const hmf::InvalidInput& ex) {
    throw ConfigError(ex.what());
  }
  if (e.temperature) {
    if (!(*e.temperature >= 0.0) || !std::isfinite(*e.temperature)) {
      throw ConfigError("temperature must be nonnegative and finite");
    }
    if (*e.temperature > 0.0 && e.n % 2 != 0) {
      throw ConfigError("a warm quiet start needs an even n");
    }
  }
  const double eps = resolved_epsilon();
  if (!(eps >= 0.0) || eps > hmf::PerturbationSpec::max_epsilon(e.n)) {
    throw ConfigError("perturbation.epsilon must lie in [0, 0.1 * 2 pi / n]");
  }
  if (integrator.t_end / integrator.dt > 1e9) throw ConfigError("too many integration steps");
  for (const auto& p : predictors) {
    if (p != "exact" && p != "rmt" && p != "vlasov" && p != "warm") {
      throw ConfigError("unknown predictor '" + p + "'");
    }
  }
  if (timeseries.empty() || summary.empty()) throw ConfigError("output file names must be set");
  if (timeseries == summary) throw ConfigError("time-series and summary files must differ");
  const double t_from = resolved_t_from();
  if (!(t_from >= 0.0) || t_from > integrator.t_end) {
    throw ConfigError("saturation.t_from must lie in [0, t_end]");
  }
}

RunConfig SweepConfig::cell(double value, std::uint64_t seed) const {
  RunConfig c = base;
  set_axis(c, axis, value);
  c.seed = seed;
  return c;
}

void SweepConfig::validate() const {
  if (values.empty()) throw ConfigError("sweep.values must not be empty");
  if (seeds.empty()) throw ConfigError("sweep needs at least one seed");
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("sweep values must be finite");
    if (axis == SweepAxis::kN && (v < 2.0 || v != std::floor(v))) {
      throw ConfigError("sweep over n needs integer values >= 2");
    }
  }
  for (double v : values) cell(v, seeds.front()).validate();
  if (summary == table) throw ConfigError("sweep summary and table files must differ");
}

std::vector<std::uint64_t> expand_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = hmf::derive_seed(base, i);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file '" + path + "'");
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
}

RunConfig parse_run_config(const Json& doc) {
  return translate([&] {
    reject_unknown(doc, "config", kRunKeys);
    RunConfig c;
    parse_run_fields(doc, c);
    return c;
  });
}

SweepConfig parse_sweep_config(const Json& doc) {
  return translate([&] {
    auto keys = kRunKeys;
    keys.insert("sweep");
    reject_unknown(doc, "config", keys);
    if (!doc.contains("sweep")) throw ConfigError("sweep config needs a 'sweep' section");
    SweepConfig c;
    parse_run_fields(doc, c.base);
    const Json& s = doc["sweep"];
    reject_unknown(s, "sweep", {"axis", "values", "seeds", "ensemble", "summary", "table"});
    if (!s.contains("axis")) throw ConfigError("sweep.axis is required");
    c.axis = parse_axis(get_string(s, "axis", "sweep"));
    if (!s.contains("values") || !s["values"].is_array()) {
      throw ConfigError("sweep.values must be an array of numbers");
    }
    for (const auto& v : s["values"]) {
      if (!v.is_number()) throw ConfigError("sweep.values must be an array of numbers");
      c.values.push_back(v.get<double>());
    }
    if (s.contains("seeds") && s.contains("ensemble")) {
      throw ConfigError("give either sweep.seeds or sweep.ensemble, not both");
    }
    if (s.contains("seeds")) {
      if (!s["seeds"].is_array()) throw ConfigError("sweep.seeds must be an array");
      for (const auto& v : s["seeds"]) {
        if (!v.is_number_unsigned()) throw ConfigError("sweep.seeds must hold unsigned integers");
        c.seeds.push_back(v.get<std::uint64_t>());
      }
    } else if (s.contains("ensemble")) {
      const auto k = get_u64(s, "ensemble", "sweep");
      if (k == 0 || k > 1'000'000) throw ConfigError("sweep.ensemble must lie in [1, 1e6]");
      c.ensemble = static_cast<std::size_t>(k);
      c.seeds = expand_seeds(c.base.seed, *c.ensemble);
    } else {
      c.seeds = {c.base.seed};
    }
    if (s.contains("summary")) c.summary = get_string(s, "summary", "sweep");
    if (s.contains("table")) c.table = get_string(s, "table", "sweep");
    return c;
  });
}

void apply_overrides(RunConfig& c, const Overrides& o) {
  if (o.seed) c.seed = *o.seed;
  if (o.dt) c.integrator.dt = *o.dt;
  if (o.t_end) c.integrator.t_end = *o.t_end;
  if (o.n) c.equilibrium.n = *o.n;
  if (o.equilibrium) c.equilibrium.kind = parse_kind(*o.equilibrium);
  if (o.delta_theta) c.equilibrium.delta_theta = *o.delta_theta;
  if (o.sigma_theta) c.equilibrium.sigma_theta = *o.sigma_theta;
  if (o.density) c.equilibrium.density = *o.density;
  if (o.temperature) c.equilibrium.temperature = *o.temperature;
  if (o.epsilon) c.epsilon = *o.epsilon;
}

void apply_overrides(SweepConfig& c, const Overrides& o) {
  apply_overrides(c.base, o);
  if (!o.seed) return;
  // A list of k seeds becomes the k seeds derived from --seed; a single seed
  // is replaced outright.
  const std::size_t k = c.ensemble ? *c.ensemble : c.seeds.size();
  c.seeds = k == 1 && !c.ensemble ? std::vector<std::uint64_t>{*o.seed} : expand_seeds(*o.seed, k);
}

Json to_json(const RunConfig& c) {
  Json e;
  e["kind"] = kind_name(c.equilibrium.kind);
  e["n"] = c.equilibrium.n;
  if (c.equilibrium.delta_theta) e["delta_theta"] = *c.equilibrium.delta_theta;
  if (c.equilibrium.sigma_theta) e["sigma_theta"] = *c.equilibrium.sigma_theta;
  if (c.equilibrium.density) e["density"] = *c.equilibrium.density;
  if (c.equilibrium.temperature) e["temperature"] = *c.equilibrium.temperature;
  e["seed"] = c.equilibrium_seed();

  Json j;
  j["seed"] = c.seed;
  j["equilibrium"] = e;
  j["perturbation"] = {{"epsilon", c.resolved_epsilon()}, {"seed", c.perturbation_seed()}};
  if (c.equilibrium.temperature && *c.equilibrium.temperature > 0.0) {
    j["momenta"] = {{"seed", c.momentum_seed()}};
  }
  j["integrator"] = {
      {"dt", c.integrator.dt},
      {"t_end", c.integrator.t_end},
      {"sample_every", c.integrator.sample_every},
      {"scheme", c.integrator.scheme == hmf::Scheme::kYoshida4 ? "yoshida4" : "leapfrog2"},
      {"summation",
       c.integrator.summation == hmf::Summation::kPlain ? "plain" : "compensated"}};
  j["outputs"] = {{"timeseries", c.timeseries}, {"summary", c.summary}};
  j["predictors"] = c.predictors;
  j["saturation"] = {{"t_from", c.resolved_t_from()}};
  return j;
}

Json to_json(const SweepConfig& c) {
  Json j = to_json(c.base);
  j["sweep"] = {{"axis", axis_name(c.axis)}, {"values", c.values}, {"seeds", c.seeds}};
  if (c.ensemble) j["sweep"]["ensemble"] = *c.ensemble;
  j["sweep"]["summary"] = c.summary;
  j["sweep"]["table"] = c.table;
  return j;
}

}  // namespace hmflab
