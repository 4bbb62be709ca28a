#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paley {

enum class ErrorKind {
  NotOddPrime,
  SizeLimit,
  BadDivisor,
  NotUndirected,
  DegenerateM,
  EmptySubset,
  InvalidWitness,
  TooLarge,
  BadInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Precondition failure raised by every module; `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace paley
