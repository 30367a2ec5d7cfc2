#pragma once

#include <stdexcept>
#include <string>

namespace circdiff {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad grid sizes, non-finite samples, unsupported orders.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Unreadable or schema-violating JSON documents.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A lift that is not an orientation-preserving diffeomorphism (min phi' too small).
class InvalidDiffeo : public Error {
 public:
  using Error::Error;
};

// Fourier re-projection could not resolve the spectrum within the resolution cap.
class BandwidthOverflow : public Error {
 public:
  using Error::Error;
};

class ExtrapolationFailure : public Error {
 public:
  using Error::Error;
};

// Iterative solvers (Newton, step-size control) that did not converge.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// Evaluation requested inside the guard band around the diagonal of T x T.
class DiagonalProximity : public Error {
 public:
  using Error::Error;
};

// Undersampled or otherwise numerically untrustworthy input.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace circdiff
