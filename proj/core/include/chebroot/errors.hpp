#ifndef CHEBROOT_ERRORS_HPP
#define CHEBROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebroot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite coefficients, zero leading coefficient and similar.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The trigonometric substitution needs m < 0. Callers are expected to catch
// this and fall back to the Sturm oracle.
class MethodNotApplicable : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

}  // namespace chebroot

#endif  // CHEBROOT_ERRORS_HPP
