#ifndef AIRYCONV_ERRORS_HPP
#define AIRYCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace airyconv {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument: non-finite input, t <= 0, mu <= 0, ...
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Requested order/name/range not supported (derivative order above cap,
// unknown builtin, asymptotic series outside its range, ...).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// Quadrature or series failed to reach the requested tolerance.
// Carries the partial result and its estimated error.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& msg, double partial_value, double error_estimate)
      : Error(msg), value(partial_value), estimate(error_estimate) {}
  double value;
  double estimate;
};

}  // namespace airyconv

#endif  // AIRYCONV_ERRORS_HPP
