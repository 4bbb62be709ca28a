#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace paley {

/// Field element encoded as its coefficient vector over GF(p) read in base p
/// (coefficient of x^i is digit i). Codes 0..p-1 are the prime subfield.
using Element = std::uint32_t;

inline constexpr std::uint32_t kDefaultFieldSizeLimit = 1u << 20;
inline constexpr std::uint32_t kNoLog = UINT32_MAX;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  /// n+1 coefficients, low degree first; the leading one is 1.
  std::vector<std::uint32_t> modulus;
  /// Code of the primitive element, i.e. exp[1].
  Element gamma = 0;
};

enum class ArithOp { Add, Mul, Neg };

/// Immutable arithmetic tables for GF(p^n).
class FieldTables {
 public:
  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t n() const noexcept { return spec_.n; }
  std::uint32_t q() const noexcept { return spec_.q; }
  Element gamma() const noexcept { return spec_.gamma; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = log_[a] + log_[b];
    if (k >= spec_.q - 1) k -= spec_.q - 1;
    return exp_[k];
  }
  /// gamma^k for any k >= 0.
  Element power_of_gamma(std::uint64_t k) const noexcept { return exp_[k % (spec_.q - 1)]; }
  /// Discrete log base gamma; kNoLog for 0.
  std::uint32_t log(Element a) const noexcept { return log_[a]; }
  std::uint32_t trace(Element a) const noexcept { return trace_[a]; }

  std::span<const Element> exp_table() const noexcept { return exp_; }
  std::span<const std::uint32_t> log_table() const noexcept { return log_; }
  std::span<const std::uint32_t> trace_table() const noexcept { return trace_; }

 private:
  friend FieldTables build_field(std::uint32_t p, std::uint32_t n, std::uint32_t size_limit);

  FieldSpec spec_;
  std::vector<std::uint32_t> powers_of_p_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> neg_;
  std::vector<std::uint32_t> trace_;
};

/// Builds GF(p^n) over the lexicographically smallest primitive monic
/// polynomial (coefficients compared low degree first). For n = 1 the
/// modulus is x - g with g the smallest primitive root mod p.
/// Throws NotOddPrime or SizeLimit.
FieldTables build_field(std::uint32_t p, std::uint32_t n,
                        std::uint32_t size_limit = kDefaultFieldSizeLimit);

Element arithmetic(const FieldTables& field, Element a, Element b, ArithOp op) noexcept;

std::uint32_t trace_of(const FieldTables& field, Element a) noexcept;

/// The coset S_{q,m} gamma^j of the subgroup of m-th powers, in exp order.
/// Throws BadDivisor unless m | q-1; j is reduced mod m.
std::vector<Element> subgroup_coset(const FieldTables& field, std::uint32_t m, std::uint32_t j);

/// The subfield GF(p^t), sorted by code. Throws BadDivisor unless t | n.
std::vector<Element> subfield_elements(const FieldTables& field, std::uint32_t t);

}  // namespace paley
