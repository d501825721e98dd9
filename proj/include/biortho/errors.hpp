#pragma once

#include <stdexcept>
#include <string>

namespace biortho {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the requested function (Gamma pole,
/// spectral condition, singular shift).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Eigenvector basis too ill-conditioned for the eigendecomposition calculus.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

class CommutationError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Parameter validation failure; `condition()` names the violated constraint
/// with a stable machine-readable tag.
class ValidationError : public Error {
 public:
  ValidationError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace biortho
