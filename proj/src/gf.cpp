#include "paley/gf.hpp"

#include <algorithm>
#include <string>

#include "paley/arith.hpp"
#include "paley/error.hpp"

namespace paley {
namespace {

using Poly = std::vector<std::uint32_t>;

// a * b mod f over GF(p); f monic of degree n, a and b of length n.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      prod[k - n + i] = (prod[k - n + i] + (p - f[i]) * c) % p;
    }
  }
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Poly pow_x(std::uint64_t e, const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  Poly result(n, 0);
  result[0] = 1;
  Poly base(n, 0);
  if (n == 1) {
    base[0] = (p - f[0]) % p;
  } else {
    base[1] = 1;
  }
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

// x has multiplicative order q-1 modulo f; this forces f irreducible.
bool is_primitive(const Poly& f, std::uint32_t p, std::uint64_t q) {
  if (f[0] == 0) return false;
  if (!is_one(pow_x(q - 1, f, p))) return false;
  for (std::uint64_t l : prime_factors(q - 1)) {
    if (is_one(pow_x((q - 1) / l, f, p))) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 1; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t l : factors) {
      std::uint64_t acc = 1;
      for (std::uint64_t i = 0; i < (p - 1) / l; ++i) acc = acc * g % p;
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p == 2 is rejected earlier
}

Poly find_modulus(std::uint32_t p, std::uint32_t n, std::uint32_t q) {
  if (n == 1) {
    const std::uint32_t g = smallest_primitive_root(p);
    return {(p - g) % p, 1};
  }
  const std::uint64_t count = ipow(p, n);
  Poly f(n + 1, 0);
  f[n] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c0 is the most significant digit of idx, so idx order is lexicographic low-degree-first.
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_primitive(f, p, q)) return f;
  }
  throw Error(ErrorKind::BadInput, "no primitive polynomial found");
}

}  // namespace

FieldTables build_field(std::uint32_t p, std::uint32_t n, std::uint32_t size_limit) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (n == 0) throw Error(ErrorKind::BadInput, "exponent must be positive");
  const auto q64 = checked_pow(p, n, size_limit);
  if (!q64) {
    throw Error(ErrorKind::SizeLimit,
                std::to_string(p) + "^" + std::to_string(n) + " exceeds " + std::to_string(size_limit));
  }
  const auto q = static_cast<std::uint32_t>(*q64);

  FieldTables t;
  t.spec_.p = p;
  t.spec_.n = n;
  t.spec_.q = q;
  t.spec_.modulus = find_modulus(p, n, q);
  t.powers_of_p_.resize(n + 1);
  t.powers_of_p_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) t.powers_of_p_[i] = t.powers_of_p_[i - 1] * p;

  const Poly& f = t.spec_.modulus;
  t.exp_.resize(q - 1);
  t.log_.assign(q, kNoLog);
  Poly cur(n, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    Element code = 0;
    for (std::uint32_t i = 0; i < n; ++i) code += cur[i] * t.powers_of_p_[i];
    t.exp_[k] = code;
    t.log_[code] = k;
    // cur *= x
    if (n == 1) {
      cur[0] = static_cast<std::uint32_t>(std::uint64_t{cur[0]} * ((p - f[0]) % p) % p);
    } else {
      const std::uint32_t top = cur[n - 1];
      for (std::uint32_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < n; ++i) cur[i] = (cur[i] + (p - f[i]) * top) % p;
    }
  }
  t.spec_.gamma = t.exp_[1 % (q - 1)];

  t.neg_.resize(q);
  for (Element a = 0; a < q; ++a) {
    Element out = 0;
    Element rest = a;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t d = rest % p;
      rest /= p;
      out += ((p - d) % p) * t.powers_of_p_[i];
    }
    t.neg_[a] = out;
  }

  t.trace_.resize(q);
  t.trace_[0] = 0;
  for (Element a = 1; a < q; ++a) {
    const std::uint64_t la = t.log_[a];
    Element acc = 0;
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      acc = t.add(acc, t.exp_[(la * frob) % (q - 1)]);
      frob = frob * p % (q - 1);
    }
    t.trace_[a] = acc;  // lies in the prime subfield
  }
  return t;
}

Element FieldTables::add(Element a, Element b) const noexcept {
  const std::uint32_t p = spec_.p;
  Element out = 0;
  for (std::uint32_t i = 0; i < spec_.n && (a | b) != 0; ++i) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    out += d * powers_of_p_[i];
    a /= p;
    b /= p;
  }
  return out;
}

Element arithmetic(const FieldTables& field, Element a, Element b, ArithOp op) noexcept {
  switch (op) {
    case ArithOp::Add: return field.add(a, b);
    case ArithOp::Mul: return field.mul(a, b);
    case ArithOp::Neg: return field.neg(a);
  }
  return 0;
}

std::uint32_t trace_of(const FieldTables& field, Element a) noexcept { return field.trace(a); }

std::vector<Element> subgroup_coset(const FieldTables& field, std::uint32_t m, std::uint32_t j) {
  const std::uint32_t order = field.q() - 1;
  if (m == 0 || order % m != 0) {
    throw Error(ErrorKind::BadDivisor, std::to_string(m) + " does not divide " + std::to_string(order));
  }
  j %= m;
  std::vector<Element> out;
  out.reserve(order / m);
  for (std::uint32_t i = 0; i < order / m; ++i) out.push_back(field.exp_table()[m * i + j]);
  return out;
}

std::vector<Element> subfield_elements(const FieldTables& field, std::uint32_t t) {
  if (t == 0 || field.n() % t != 0) {
    throw Error(ErrorKind::BadDivisor, std::to_string(t) + " does not divide " + std::to_string(field.n()));
  }
  const std::uint32_t sub_order = static_cast<std::uint32_t>(ipow(field.p(), t)) - 1;
  const std::uint32_t step = (field.q() - 1) / sub_order;
  std::vector<Element> out{0};
  for (std::uint32_t k = 0; k < sub_order; ++k) out.push_back(field.exp_table()[k * step]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace paley
