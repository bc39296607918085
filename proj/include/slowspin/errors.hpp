#pragma once

#include <stdexcept>
#include <string>

namespace slowspin {

// Bad user input: out-of-range or non-finite parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but has no answer in the model:
// parity mismatch, orthogonal endpoints, degenerate normalization.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical breakdown: quadrature non-convergence, vanishing norm at a node.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParityMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class OrthogonalEndpoints : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateNormalization : public DomainError {
 public:
  using DomainError::DomainError;
};

class VanishingNorm : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace slowspin
