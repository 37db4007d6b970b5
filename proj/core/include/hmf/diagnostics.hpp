#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hmf/integrator.hpp"
#include "hmf/state.hpp"

namespace hmf {

struct TimeWindow {
  double t_start = 0.0;
  double t_end = 0.0;
};

// Least-squares line through (t, ln M).
struct GrowthFit {
  double gamma = 0.0;
  double std_error = 0.0;
  TimeWindow window;
  double r_squared = 0.0;
  std::size_t samples = 0;
};

inline constexpr std::size_t kMinFitSamples = 10;
inline constexpr double kNoiseFloorFactor = 10.0;
inline constexpr double kSaturationFactor = 10.0;
inline constexpr double kMinRSquared = 0.999;

// With no window, fits the longest contiguous run of samples with
// M in [10 M(0), max(M) / 10] whose fit reaches R^2 >= 0.999. Throws
// NoExponentialPhase when nothing qualifies and InvalidInput on M <= 0 inside
// an explicit window.
GrowthFit fit_growth_rate(std::span<const double> t, std::span<const double> m,
                          std::optional<TimeWindow> window = std::nullopt);
GrowthFit fit_growth_rate(std::span<const Observables> samples,
                          std::optional<TimeWindow> window = std::nullopt);
GrowthFit fit_growth_rate(const Trajectory& trajectory,
                          std::optional<TimeWindow> window = std::nullopt);

struct GrowthSample {
  double t = 0.0;
  double rate = 0.0;  // dM/dt / M
};

// Centered differences inside, one-sided at the ends.
std::vector<GrowthSample> instantaneous_growth(std::span<const double> t,
                                               std::span<const double> m);
std::vector<GrowthSample> instantaneous_growth(std::span<const Observables> samples);

// Mean of dM/dt / M over samples inside the window.
double growth_plateau(std::span<const GrowthSample> series, const TimeWindow& window);

struct EquilibriumPrediction {
  double m_eq = 0.0;
  double t_eq = 0.0;
  double beta = 0.0;
};

// Canonical equilibrium of the cold system (U = 1/2): solves
// I1(x)/I0(x) = 1/x for x = sqrt(beta).
EquilibriumPrediction equilibrium_prediction_cold();

struct TimescaleReport {
  double gamma = 0.0;
  double omega_b = 0.0;  // sqrt(M)
  double ratio = 0.0;    // gamma / omega_b
};

TimescaleReport timescale_report(double gamma, double m_reference);

struct SaturationStats {
  double t_from = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;  // population standard deviation
  std::size_t samples = 0;
};

SaturationStats saturation_stats(std::span<const Observables> samples, double t_from);
SaturationStats saturation_stats(const Trajectory& trajectory, double t_from);

}  // namespace hmf
