#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |sin eta| below tolerance; the weights a and b are undefined.
struct DegenerateEta : Error {
  using Error::Error;
};

// The counting convention was requested away from eta = 2pi/3.
struct InvalidConvention : Error {
  using Error::Error;
};

// An arrow pattern with in-degree != 2 at some vertex.
struct IceViolation : Error {
  using Error::Error;
};

// Enumeration requested beyond the configured ceiling.
struct SizeTooLarge : Error {
  using Error::Error;
};

// Some guarded |sin| denominator or Vandermonde factor is below threshold;
// the caller must perturb the parameters or use enumeration / closed forms.
struct DegenerateParameters : Error {
  using Error::Error;
};

// A condition estimate exceeded its bound during a linear solve.
struct IllConditioned : Error {
  using Error::Error;
};

// The homogeneous interpolation system has numerical rank below 2n-1.
struct RankDeficient : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

// An exact integer identity failed; the message names the first bad cell.
struct TableMismatch : Error {
  using Error::Error;
};

// A division that an identity requires to be exact left a remainder.
struct NonIntegerQuotient : Error {
  using Error::Error;
};

// Evaluation point too close to a pole (sin 3u = 0).
struct NearSingular : Error {
  using Error::Error;
};

}  // namespace sixv
