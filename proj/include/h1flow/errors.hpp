#pragma once

#include <stdexcept>
#include <string>

namespace h1flow {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ds-weighted operation met a zero-length edge.
class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// Curve length too small to evaluate the Green's kernel.
class ConstantMapGuard : public Error {
 public:
  using Error::Error;
};

class MismatchedFrames : public Error {
 public:
  using Error::Error;
};

class NonMonotoneTwist : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace h1flow
