#pragma once

/// \file
/// Exception hierarchy. Validation failures map to CLI exit code 2, numerical
/// failures to exit code 3.

#include <stdexcept>
#include <string>
#include <utility>

namespace ela {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, broken index symmetries, unknown labels.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation could not produce a trustworthy answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(const std::string& what, double smallest_singular_value)
      : NumericalError(what), smallest_singular_value_(smallest_singular_value) {}
  double smallest_singular_value() const { return smallest_singular_value_; }

 private:
  double smallest_singular_value_;
};

/// Two classification branches are both compatible with the data at the
/// requested tolerance.
class AmbiguityError : public NumericalError {
 public:
  AmbiguityError(std::string first, std::string second, const std::string& detail = {})
      : NumericalError("ambiguous classification between " + first + " and " + second +
                       (detail.empty() ? std::string() : ": " + detail)),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace ela
