#pragma once

#include <stdexcept>
#include <string>

namespace algvar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& name)
      : Error("no value assigned to variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Raised when a Laurent polynomial with negative order is evaluated at t = 0.
class PoleAtZero : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  ConstraintViolation(const std::string& family, const std::string& constraint)
      : Error("parameters of " + family + " violate constraint: " + constraint),
        constraint_(constraint) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

}  // namespace algvar
