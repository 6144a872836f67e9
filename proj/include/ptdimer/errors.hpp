#pragma once

#include <stdexcept>
#include <string>

namespace ptdimer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A waveguide configuration that cannot exist physically (non-positive
/// coupling or indices, unreachable sign of gamma, non-finite input).
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// An argument outside an operation's domain (negative propagation distance,
/// non-finite input, malformed grid).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An observable requested outside its domain, e.g. a renormalized share of
/// a vanishing field or the q parameter of a dimer without gain.
class UndefinedObservable : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// The a-priori growth envelope exceeds the configured limit, or the value is
/// no longer representable.
class GrowthLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The moment integrator produced non-finite values.
class IntegrationBlowUp : public Error {
 public:
  using Error::Error;
};

}  // namespace ptdimer
