#include "hmf/vlasov.hpp"

#include <cmath>
#include <type_traits>

#include "hmf/error.hpp"
#include "hmf/quadrature.hpp"

namespace hmf {

DensityProfile::DensityProfile(AngularDensity density) : rep_(std::move(density)) {
  const auto& d = std::get<AngularDensity>(rep_);
  if (!d.pdf || !(d.hi > d.lo)) throw InvalidInput("analytic density needs a pdf and support");
}

DensityProfile::DensityProfile(FourierTable table) : rep_(std::move(table)) {
  const auto& t = std::get<FourierTable>(rep_);
  if (t.coeffs.empty()) throw InvalidInput("Fourier table needs at least n_{0,0}");
  if (std::abs(kTwoPi * t.coeffs[0] - 1.0) > 1e-10) {
    throw InvalidInput("Fourier table is not normalized: n_{0,0} must be 1/(2 pi)");
  }
}

DensityProfile::DensityProfile(SampledDensity sample) : rep_(std::move(sample)) {
  if (std::get<SampledDensity>(rep_).theta.empty()) throw InvalidInput("empty particle sample");
}

DensityProfile DensityProfile::from_state(const ParticleState& state) {
  const auto th = state.theta();
  return DensityProfile(SampledDensity{std::vector<double>(th.begin(), th.end())});
}

namespace {

std::complex<double> analytic_coefficient(const AngularDensity& d, int k) {
  const auto edges = d.segments();
  const double norm = quad::integrate_segments(d.pdf, edges, kFourierTolerance);
  if (std::abs(norm - 1.0) > 1e-10) throw InvalidInput("analytic density is not normalized");
  if (k == 0) return 1.0 / kTwoPi;
  const double dk = static_cast<double>(k);
  const double re = quad::integrate_segments(
      [&](double t) { return d.pdf(t) * std::cos(dk * t); }, edges, kFourierTolerance);
  const double im = quad::integrate_segments(
      [&](double t) { return -d.pdf(t) * std::sin(dk * t); }, edges, kFourierTolerance);
  return std::complex<double>(re, im) / kTwoPi;
}

std::complex<double> table_coefficient(const FourierTable& t, int k) {
  const std::size_t ak = static_cast<std::size_t>(k < 0 ? -k : k);
  if (ak >= t.coeffs.size()) return {};
  return k < 0 ? std::conj(t.coeffs[ak]) : t.coeffs[ak];
}

std::complex<double> sample_coefficient(const SampledDensity& s, int k) {
  const double dk = static_cast<double>(k);
  double re = 0.0, im = 0.0;
  for (double t : s.theta) {
    re += std::cos(dk * t);
    im -= std::sin(dk * t);
  }
  return std::complex<double>(re, im) / (kTwoPi * static_cast<double>(s.theta.size()));
}

}  // namespace

std::complex<double> fourier_coefficient(const DensityProfile& profile, int k) {
  return std::visit(
      [k](const auto& rep) -> std::complex<double> {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, AngularDensity>) {
          return analytic_coefficient(rep, k);
        } else if constexpr (std::is_same_v<R, FourierTable>) {
          return table_coefficient(rep, k);
        } else {
          return sample_coefficient(rep, k);
        }
      },
      profile.rep());
}

DispersionRoots dispersion_roots(const DensityProfile& profile) {
  const std::complex<double> n01 = fourier_coefficient(profile, 1);
  if (std::abs(n01) >= kUnmagnetizedTolerance) {
    throw MagnetizedProfile("density has a nonzero first harmonic (|n_{0,1}| = " +
                            std::to_string(std::abs(n01)) + ")");
  }
  DispersionRoots r;
  r.n00 = fourier_coefficient(profile, 0).real();
  r.n02 = fourier_coefficient(profile, 2);
  const double a2 = std::abs(r.n02);
  r.omega_sq_plus = -kPi * r.n00 + kPi * a2;
  r.omega_sq_minus = -kPi * r.n00 - kPi * a2;
  r.admissible = a2 <= r.n00 * (1.0 + 1e-12);
  return r;
}

double vlasov_growth_rate(const DensityProfile& profile) {
  const DispersionRoots r = dispersion_roots(profile);
  return std::sqrt(std::max(-r.omega_sq_minus, 0.0));
}

WarmRate warm_waterbag_growth_rate(double temperature) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw InvalidInput("temperature must be nonnegative");
  }
  const double g2 = 0.5 - 3.0 * temperature;
  if (g2 <= 0.0) return {0.0, true};
  return {std::sqrt(g2), false};
}

}  // namespace hmf
