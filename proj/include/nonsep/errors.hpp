#pragma once

#include <stdexcept>
#include <string>

namespace nonsep {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes or factor dimensions do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Input to hermitian_eig is farther from Hermitian than the tolerance allows.
struct NotHermitian : Error {
  using Error::Error;
};

// A state-level invariant is violated (norm, trace, positivity, size caps).
struct InvalidState : Error {
  using Error::Error;
};

// Purification ancilla smaller than the operator's rank.
struct InsufficientAncilla : Error {
  using Error::Error;
};

// A·D·A* vanished where a density operator was required.
struct ZeroImage : Error {
  using Error::Error;
};

// No separating vector exists at this truncation (d1 < d2·d3).
struct InsufficientDimension : Error {
  using Error::Error;
};

// Requested rank outside [1, total dimension].
struct BadRank : Error {
  using Error::Error;
};

// Malformed matrix or config file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace nonsep
