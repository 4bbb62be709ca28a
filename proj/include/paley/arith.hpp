#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace paley {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t x) noexcept;

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t limit = UINT64_MAX) noexcept;

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) noexcept;

/// Writes q = p^n with p prime; nullopt if q is not a prime power.
std::optional<PrimePower> factor_prime_power(std::uint64_t q) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t x);

inline bool divides(std::uint64_t d, std::uint64_t x) noexcept { return d != 0 && x % d == 0; }

}  // namespace paley
