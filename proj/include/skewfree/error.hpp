#pragma once

#include <stdexcept>
#include <string>

namespace skewfree {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomial strings, automorphism specs, words).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings (POLY vs LAURENT, different sigma,
/// different quadratic fields).
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (det not +-1, zero polynomial
/// where a degree is required, non-unit gauge element, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The 2^n word expansion or a sumset grew past the configured cap.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace skewfree
