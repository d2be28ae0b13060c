#pragma once

#include <stdexcept>
#include <string>

namespace langevin {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An eigenvalue (or an eigenvalue image under a scalar map) required to be
// positive was found nonpositive, e.g. when taking sqrt/log of a spectrum.
struct NonPositiveSpectrum : Error {
  double eigenvalue;
  long index;
  NonPositiveSpectrum(double ev, long idx, const std::string& what_arg)
      : Error(what_arg), eigenvalue(ev), index(idx) {}
};

// A proposal scale factor S(x, h) lost positive-definiteness.
struct ScaleNotPositive : Error {
  double eigenvalue;
  ScaleNotPositive(double ev, const std::string& what_arg)
      : Error(what_arg), eigenvalue(ev) {}
};

// A diagnostic was asked of a trace with too few recorded steps.
struct EmptyTrace : Error {
  using Error::Error;
};

// Experiment configuration is missing, malformed, or inconsistent.
struct ConfigError : Error {
  using Error::Error;
};

// A Monte-Carlo estimate of a squared constant came out negative beyond
// three standard errors; indicates a broken integrand, not sampling noise.
struct NegativeEstimate : Error {
  using Error::Error;
};

// The limiting-speed curve is degenerate (k = 0 gives h(l) = l^2, no maximum).
struct DegenerateK : Error {
  using Error::Error;
};

}  // namespace langevin
