#pragma once

#include <stdexcept>
#include <string>

namespace whsg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (grid sizes, tolerances, suite names).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different grids or have inconsistent lengths.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds what a descriptor or routine can deliver exactly
/// (smoothness budget, exact integration of non-polynomial forms, seminorm order).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A grid-exact operation was asked for a non-commensurate parameter.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A function failed a class certificate (support or vanishing moments).
class ClassError : public Error {
 public:
  using Error::Error;
};

/// A group element lies outside the semigroup an operation is restricted to.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace whsg
