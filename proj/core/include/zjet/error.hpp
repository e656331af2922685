#pragma once

#include <stdexcept>
#include <string>

namespace zjet {

/// Base class for every error raised by the kernel.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed argument values (bad n, bad signature, bad exponent, ...).
struct ValueError : Error {
  using Error::Error;
};

/// Operands belong to different coordinate algebras.
struct RingMismatchError : Error {
  using Error::Error;
};

/// Shape/arity disagreement (tuple lengths, matrix dimensions).
struct DimensionError : Error {
  using Error::Error;
};

/// Degree bookkeeping violated (inhomogeneous input, wrong degree).
struct DegreeError : Error {
  using Error::Error;
};

/// Element is not invertible in the coefficient ring (zero constant term).
struct NonUnitError : Error {
  using Error::Error;
};

/// A pullback of a zero-degree coordinate has a nonzero constant term.
struct BasepointError : Error {
  using Error::Error;
};

/// Matrix is singular where an inverse was required.
struct SingularError : Error {
  using Error::Error;
};

/// Morphism fails the invertibility test of the differential at the basepoint.
struct NotLocallyInvertibleError : Error {
  using Error::Error;
};

/// Operation would exceed the truncation order it needs to stay exact.
struct CapError : Error {
  using Error::Error;
};

}  // namespace zjet
