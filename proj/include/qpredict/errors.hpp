#pragma once

#include <stdexcept>
#include <string>

namespace qpredict {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The parameters do not describe a positive semidefinite, unit-trace state.
class NonPhysical : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Conditioning on a measurement outcome of (numerically) zero probability.
class ZeroProbabilityBranch : public Error {
 public:
  using Error::Error;
};

// |t_B| = 1: the steering-ellipsoid centroid is undefined.
class DegenerateB : public Error {
 public:
  using Error::Error;
};

class InvalidRotation : public Error {
 public:
  using Error::Error;
};

class InvalidDirection : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

// Root bracketing failed: the rate does not change sign on [lo, hi].
class NoSignChange : public Error {
 public:
  using Error::Error;
};

}  // namespace qpredict
