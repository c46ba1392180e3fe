#pragma once

#include <stdexcept>
#include <string>

namespace basechange {

class RingMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedBaseChangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the maps of a complex do not compose to zero.
class ComplexError : public std::invalid_argument {
 public:
  ComplexError(int degree, const std::string& what)
      : std::invalid_argument(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class OracleTooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace basechange
