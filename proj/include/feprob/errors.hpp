#pragma once

#include <stdexcept>
#include <string>

namespace feprob {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed call: mismatched dimensions, wrong value-list length, bad flags.
class UsageError : public Error {
public:
  using Error::Error;
};

/// Numeric-domain violation: argument outside the range a formula is defined on.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A theorem hypothesis (k > n/2) does not hold for the requested order.
class HypothesisError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Degenerate simplex geometry.
class GeometryError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Requested (dimension, degree) combination is outside the supported range.
class CapabilityError : public DomainError {
public:
  using DomainError::DomainError;
};

inline void require_hypothesis(int k, int n) {
  if (2 * k <= n)
    throw HypothesisError("hypothesis k > n/2 violated: k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
}

} // namespace feprob
