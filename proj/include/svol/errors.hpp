#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svol {

/// Raised when an input violates a mathematical precondition. The kind is a
/// short stable token suitable for machine parsing ("precondition",
/// "parse", "not-attained", "inconsistent", "internal", ...).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : DomainError("parse", "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Two independent computations that must agree did not. Always a bug.
class InternalError : public DomainError {
 public:
  explicit InternalError(const std::string& message) : DomainError("internal", message) {}
};

}  // namespace svol
