#pragma once

#include <stdexcept>
#include <string>

namespace gbessel {

// Every numerical failure in the library derives from MathError so callers
// (the CLI in particular) can map the whole family to one exit status.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma or Pochhammer-normalized quantity evaluated at a non-positive integer.
class PoleError : public MathError {
 public:
  using MathError::MathError;
};

class MaxTermsExceeded : public MathError {
 public:
  using MathError::MathError;
};

// Point lies on the selected branch cut of z^nu.
class BranchError : public MathError {
 public:
  using MathError::MathError;
};

// Series is not of the form z + a_2 z^2 + ...
class NotNormalized : public MathError {
 public:
  using MathError::MathError;
};

class NonvanishingAtZero : public MathError {
 public:
  using MathError::MathError;
};

class OutOfDomain : public MathError {
 public:
  using MathError::MathError;
};

class ZeroDenominator : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace gbessel
