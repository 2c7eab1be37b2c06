#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when rewriting exceeds its step budget or revisits a monomial
/// still being rewritten; under non-monomial orders this is how suspected
/// non-termination surfaces.
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace opforge
