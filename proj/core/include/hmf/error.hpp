#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmf {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad sizes, out-of-domain parameters).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// sin(omega) too small for the closed-form Toeplitz eigenvalues; the caller
// must take the omega -> 0 limit.
class DegenerateFrequency : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A density with a nonzero first Fourier harmonic was given to a routine that
// needs an unmagnetized one.
class MagnetizedProfile : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The integrator produced a non-finite coordinate.
class NumericalBlowup : public Error {
 public:
  NumericalBlowup(std::int64_t step_index, const std::string& what)
      : Error(what + " (step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}

  std::int64_t step_index() const noexcept { return step_index_; }

 private:
  std::int64_t step_index_;
};

// An iterative numerical routine (quadrature, eigen-solver, root finder) did
// not reach its tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// The Furedi-Komlos law requires a strictly positive mean entry.
class TheoremInapplicable : public Error {
 public:
  using Error::Error;
};

// No exponential growth phase could be located in a trajectory.
class NoExponentialPhase : public Error {
 public:
  using Error::Error;
};

}  // namespace hmf
