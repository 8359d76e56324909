#pragma once

#include <stdexcept>
#include <string>

namespace cwsurgery {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (zero denominators, non-coprime
/// arguments, degenerate linking matrices, malformed table rows).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates the hypotheses of a theorem the
/// caller asked us to apply.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace cwsurgery
