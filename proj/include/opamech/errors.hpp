#pragma once

#include <stdexcept>
#include <string>

namespace opamech {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates one of its documented bounds.
class InvalidParam : public Error {
 public:
  InvalidParam(const std::string& name, double value, const std::string& constraint)
      : Error("invalid parameter " + name + " = " + std::to_string(value) +
              " (requires " + constraint + ")"),
        name_(name), value_(value), constraint_(constraint) {}

  const std::string& name() const { return name_; }
  double value() const { return value_; }
  const std::string& constraint() const { return constraint_; }

 private:
  std::string name_;
  double value_;
  std::string constraint_;
};

/// The steady-state denominator sits at the parametric-oscillation threshold.
class DenominatorSingular : public Error {
 public:
  using Error::Error;
};

/// No nonnegative real root solves the self-consistent photon-number equation.
class NoRealRoot : public Error {
 public:
  using Error::Error;
};

/// Root refinement did not converge within the iteration budget.
class RootFindFailure : public Error {
 public:
  using Error::Error;
};

/// A trajectory left the representable range (typically an unstable flow).
class NonFinite : public Error {
 public:
  using Error::Error;
};

/// The iterative eigenvalue reduction exceeded its sweep budget.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Lyapunov solve requested for a drift matrix that is not asymptotically stable.
class UnstableDrift : public Error {
 public:
  using Error::Error;
};

/// The vectorized Lyapunov system is numerically singular.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues of the symplectic product deviate from pure imaginarity.
class NotSymplecticSpectrum : public Error {
 public:
  using Error::Error;
};

/// The reduced covariance matrix fails a physicality bound; upstream solver issue.
class UnphysicalCM : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration input (CLI / config file layer).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace opamech
