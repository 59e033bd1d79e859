#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace fracwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid too coarse for the requested number of modes.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Coefficients of a supposedly real field are not Hermitian-symmetric.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// Mismatched or invalid domains, negative exponents, out-of-range arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid physical or numerical parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or unknown experiment.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Traveling-profile construction failed.
class ProfileError : public Error {
 public:
  using Error::Error;
};

/// NaN or runaway amplitude during time integration. `time()` is the last
/// time at which the state was still finite; NaN when raised outside an
/// integration loop.
class BlowUpError : public Error {
 public:
  explicit BlowUpError(const std::string& what,
                       double time = std::numeric_limits<double>::quiet_NaN())
      : Error(what), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace fracwave
