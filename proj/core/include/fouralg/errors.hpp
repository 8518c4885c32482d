#ifndef FOURALG_ERRORS_HPP
#define FOURALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fouralg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields (or fields with different characteristic).
struct FieldMismatch : Error {
  using Error::Error;
};

/// Incompatible dimensions (matrix shapes, tensor shapes, vector lengths).
struct ShapeError : Error {
  using Error::Error;
};

/// Operation needs a finite field but was called over the rationals.
struct UnsupportedOverRationals : Error {
  using Error::Error;
};

/// Polarization engine only handles identities of degree <= 4.
struct UnsupportedDegree : Error {
  using Error::Error;
};

/// Enumeration would exceed the candidate budget; pass force to override.
struct SizeGuard : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct InvalidCrossedSystem : Error {
  using Error::Error;
};

struct NotAbelianBase : Error {
  using Error::Error;
};

struct NotSurjective : Error {
  using Error::Error;
};

struct NotSection : Error {
  using Error::Error;
};

struct NotMorphism : Error {
  using Error::Error;
};

struct InvalidPair : Error {
  using Error::Error;
};

struct NotAModule : Error {
  using Error::Error;
};

struct InvalidLambda : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace fouralg

#endif
