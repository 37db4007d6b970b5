#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hmf {

// A probability density for an angle, supported on [lo, hi]. Breakpoints mark
// interior discontinuities so quadrature can split there.
struct AngularDensity {
  std::function<double(double)> pdf;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> breakpoints;
  // Upper bound of pdf on [lo, hi], used as the rejection envelope.
  double pdf_max = 0.0;

  // Sorted interval edges: lo, interior breakpoints, hi.
  std::vector<double> segments() const;
};

// 1/(2 dtheta) on [-dtheta, dtheta].
AngularDensity waterbag_density(double delta_theta);

// exp(-t^2 / (2 s^2)) normalized on [-pi/2, pi/2].
AngularDensity truncated_gaussian_density(double sigma_theta);

// (f0(t) + f0(t - pi)) / 2 on [-pi, pi): one cluster and its antipodal copy.
// f0 must be supported inside an interval of length <= pi.
AngularDensity antipodal_density(const AngularDensity& cluster);

struct NamedDensity {
  std::string id;
  AngularDensity density;  // on [-pi, pi)
  std::size_t symmetry = 2;
};

// Densities on the circle with zero first harmonic:
//   uniform : 1/(2 pi)                        symmetry 2
//   cos2    : (1 + 0.5 cos 2t) / (2 pi)        symmetry 2
//   cos3    : (1 + cos 3t) / (2 pi)            symmetry 3 (zero 2nd harmonic)
//   cos4    : (1 + 0.8 cos 4t) / (2 pi)        symmetry 4 (zero 2nd harmonic)
const NamedDensity& named_density(const std::string& id);
std::vector<std::string> named_density_ids();

}  // namespace hmf
