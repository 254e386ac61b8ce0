#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace triosc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// p^3 - q^2 of the characteristic cubic is negative beyond rounding.
class DiscriminantNegative : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// A normal or base frequency that must be strictly positive is not.
class NonpositiveFrequency : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// det G departs from one, so G cannot be turned into a covariance by
/// symplectic conjugation.
class NotPure : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// The measured x quadrature has (numerically) zero variance.
class SingularQuadrature : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

/// The coupling matrix of a scenario is not positive definite.
class UnphysicalParameters : public Error {
 public:
  UnphysicalParameters(const std::string& what, std::array<double, 3> minors)
      : Error(what), minors_(minors) {}

  const std::array<double, 3>& minors() const noexcept { return minors_; }

 private:
  std::array<double, 3> minors_;
};

class MissingColumn : public Error {
 public:
  using Error::Error;
};

}  // namespace triosc
