#ifndef HAHN_ERRORS_HPP
#define HAHN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahn {

/// Base of every numeric failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class NonTerminating : public Error {
 public:
  using Error::Error;
};

class DegenerateRecurrence : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

class ZeroLambda : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hahn

#endif  // HAHN_ERRORS_HPP
