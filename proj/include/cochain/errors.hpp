#pragma once

#include <stdexcept>
#include <string>

namespace cochain {

// Base of every error thrown by the library. The CLI maps subclasses onto
// exit codes: IdentityViolation -> 1, everything else -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computed or supplied object violates an algebraic identity.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// Division by zero, log of a non-positive number, sqrt of a negative number.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

// Evaluation reached a FormalPrimitive node.
class Unevaluable : public Error {
 public:
  using Error::Error;
};

class IncomparableBackends : public Error {
 public:
  using Error::Error;
};

class NonPolynomial : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidMember : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Tensor JSON does not follow the schema; the message carries a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class SingularMetric : public Error {
 public:
  using Error::Error;
};

class NotConnectionShaped : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};

}  // namespace cochain
