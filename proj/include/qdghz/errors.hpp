#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdghz {

/// Input failed a domain invariant. `key()` names the offending field when known.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& message)
      : std::invalid_argument(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Malformed configuration text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The scaled characteristic polynomial was requested with a vanishing scale (Omega = 0).
class DegenerateScale : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quartic root kept a non-negligible imaginary part; the input was not Hermitian-derived.
class ComplexRootResidual : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The adaptive integrator needed a step below its floor.
class StepUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdghz
