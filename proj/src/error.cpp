#include "paley/error.hpp"

namespace paley {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::NotUndirected: return "NotUndirected";
    case ErrorKind::DegenerateM: return "DegenerateM";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace paley
