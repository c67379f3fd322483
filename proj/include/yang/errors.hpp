#pragma once

#include <stdexcept>
#include <string>

namespace yang {

// Input that violates a documented precondition. CLI maps this family to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical kernel failed to produce a trustworthy result. CLI maps this family to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public ValidationError {
 public:
  explicit DimensionMismatch(const std::string& msg) : ValidationError(msg) {}
};

class WrongShape : public ValidationError {
 public:
  explicit WrongShape(const std::string& msg) : ValidationError(msg) {}
};

class NotHermitian : public ValidationError {
 public:
  explicit NotHermitian(const std::string& msg) : ValidationError(msg) {}
};

class NotNormalized : public ValidationError {
 public:
  explicit NotNormalized(const std::string& msg) : ValidationError(msg) {}
};

class NotDensity : public ValidationError {
 public:
  explicit NotDensity(const std::string& msg) : ValidationError(msg) {}
};

// mu + nu == 0: every generator in both families carries a 1/(mu+nu) prefactor.
class DegenerateParams : public ValidationError {
 public:
  explicit DegenerateParams(const std::string& msg) : ValidationError(msg) {}
};

// Operation only defined on the mu*nu = -lambda^2/4 manifold.
class ConstraintViolated : public ValidationError {
 public:
  explicit ConstraintViolated(const std::string& msg) : ValidationError(msg) {}
};

class EmptyRange : public ValidationError {
 public:
  explicit EmptyRange(const std::string& msg) : ValidationError(msg) {}
};

class SingularMatrix : public NumericalError {
 public:
  explicit SingularMatrix(const std::string& msg) : NumericalError(msg) {}
};

class NoConvergence : public NumericalError {
 public:
  explicit NoConvergence(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace yang
