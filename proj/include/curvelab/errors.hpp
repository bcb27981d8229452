#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Malformed or contradictory input. `field()` is a JSON-pointer-like path.
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }
  const char* kind() const noexcept override { return "SpecError"; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IoError"; }
};

/// An operation was called outside its documented domain (e.g. alpha outside [0, pi]).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PreconditionError"; }
};

class NotClosedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* kind() const noexcept override { return "NotClosedError"; }
};

/// Base class of everything the CLI reports as a numeric degeneracy.
class NumericDegeneracy : public Error {
 public:
  NumericDegeneracy(const std::string& message, double param) : Error(message), param_(param) {}
  double param() const noexcept { return param_; }

 private:
  double param_;
};

#define CURVELAB_DEGENERACY(Name)                                        \
  class Name : public NumericDegeneracy {                                \
   public:                                                               \
    using NumericDegeneracy::NumericDegeneracy;                          \
    const char* kind() const noexcept override { return #Name; }         \
  }

CURVELAB_DEGENERACY(RegularityError);
CURVELAB_DEGENERACY(FlatError);
CURVELAB_DEGENERACY(DegenerateSingularSetError);
CURVELAB_DEGENERACY(OnSigmaError);
CURVELAB_DEGENERACY(DegenerateSigmaPointError);
CURVELAB_DEGENERACY(BorderlineClassification);

#undef CURVELAB_DEGENERACY

}  // namespace curvelab
