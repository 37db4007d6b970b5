#include "hmf/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hmf/error.hpp"
#include "hmf/state.hpp"

namespace hmf {

std::vector<double> AngularDensity::segments() const {
  std::vector<double> edges{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

AngularDensity waterbag_density(double delta_theta) {
  if (!(delta_theta > 0.0) || delta_theta > kPi) {
    throw InvalidInput("waterbag half-width must lie in (0, pi]");
  }
  const double h = 1.0 / (2.0 * delta_theta);
  AngularDensity d;
  d.pdf = [delta_theta, h](double t) { return std::abs(t) <= delta_theta ? h : 0.0; };
  d.lo = -delta_theta;
  d.hi = delta_theta;
  d.pdf_max = h;
  return d;
}

AngularDensity truncated_gaussian_density(double sigma_theta) {
  if (!(sigma_theta > 0.0) || !std::isfinite(sigma_theta)) {
    throw InvalidInput("sigma_theta must be positive");
  }
  const double half = 0.5 * kPi;
  const double norm =
      sigma_theta * std::sqrt(kTwoPi) * std::erf(half / (sigma_theta * std::sqrt(2.0)));
  const double inv_2s2 = 1.0 / (2.0 * sigma_theta * sigma_theta);
  AngularDensity d;
  d.pdf = [norm, inv_2s2, half](double t) {
    return std::abs(t) <= half ? std::exp(-t * t * inv_2s2) / norm : 0.0;
  };
  d.lo = -half;
  d.hi = half;
  d.pdf_max = 1.0 / norm;
  return d;
}

AngularDensity antipodal_density(const AngularDensity& cluster) {
  if (cluster.hi - cluster.lo > kPi + 1e-12) {
    throw InvalidInput("cluster support must fit in an interval of length pi");
  }
  AngularDensity d;
  auto f = cluster.pdf;
  const double lo = cluster.lo;
  const double hi = cluster.hi;
  d.pdf = [f, lo, hi](double t) {
    double v = 0.0;
    // Both the cluster and its copy are read modulo 2 pi.
    for (double shift : {0.0, kPi}) {
      double x = normalize_angle(t - shift);
      for (double wrap : {-kTwoPi, 0.0, kTwoPi}) {
        const double y = x + wrap;
        if (y >= lo && y <= hi) {
          v += f(y);
          break;
        }
      }
    }
    return 0.5 * v;
  };
  d.lo = -kPi;
  d.hi = kPi;
  d.pdf_max = 0.5 * cluster.pdf_max;
  for (double shift : {0.0, kPi}) {
    for (double e : {lo, hi}) {
      const double b = normalize_angle(e + shift);
      if (b > -kPi && b < kPi) d.breakpoints.push_back(b);
    }
    for (double b : cluster.breakpoints) d.breakpoints.push_back(normalize_angle(b + shift));
  }
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  return d;
}

namespace {

NamedDensity make_harmonic(const std::string& id, int order, double amplitude,
                           std::size_t symmetry) {
  NamedDensity nd;
  nd.id = id;
  nd.symmetry = symmetry;
  nd.density.lo = -kPi;
  nd.density.hi = kPi;
  nd.density.pdf = [order, amplitude](double t) {
    return (1.0 + amplitude * std::cos(order * t)) / kTwoPi;
  };
  nd.density.pdf_max = (1.0 + std::abs(amplitude)) / kTwoPi;
  return nd;
}

const std::map<std::string, NamedDensity>& registry() {
  static const std::map<std::string, NamedDensity> r = [] {
    std::map<std::string, NamedDensity> m;
    m.emplace("uniform", make_harmonic("uniform", 0, 0.0, 2));
    m.emplace("cos2", make_harmonic("cos2", 2, 0.5, 2));
    m.emplace("cos3", make_harmonic("cos3", 3, 1.0, 3));
    m.emplace("cos4", make_harmonic("cos4", 4, 0.8, 4));
    return m;
  }();
  return r;
}

}  // namespace

const NamedDensity& named_density(const std::string& id) {
  const auto& r = registry();
  auto it = r.find(id);
  if (it == r.end()) throw InvalidInput("unknown density id '" + id + "'");
  return it->second;
}

std::vector<std::string> named_density_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : registry()) ids.push_back(k);
  return ids;
}

}  // namespace hmf
