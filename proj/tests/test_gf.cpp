#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "paley/arith.hpp"
#include "paley/error.hpp"
#include "paley/gf.hpp"

using namespace paley;

namespace {

// Schoolbook product of two coefficient vectors reduced by the monic modulus.
// Shares nothing with the exp/log tables.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - modulus[i]) * c) % p;
    prod[k] = 0;
  }
  return {prod.begin(), prod.begin() + n};
}

std::vector<std::uint32_t> digits(Element a, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> d(n);
  for (auto& x : d) {
    x = a % p;
    a /= p;
  }
  return d;
}

Element code(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Element a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

std::uint64_t mult_order(const FieldTables& f, Element a) {
  Element x = a;
  std::uint64_t k = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("prime field GF(5) uses the smallest primitive root") {
  const FieldTables f = build_field(5, 1);
  CHECK(f.q() == 5);
  CHECK(f.gamma() == 2);
  CHECK(mult_order(f, 2) == 4);
  CHECK(arithmetic(f, 3, 4, ArithOp::Add) == 2);
  CHECK(arithmetic(f, 3, 4, ArithOp::Mul) == 2);
  CHECK(arithmetic(f, 0, 0, ArithOp::Neg) == 0);
  CHECK(trace_of(f, 3) == 3);
}

TEST_CASE("GF(9) generator has full order and a nontrivial trace") {
  const FieldTables f = build_field(3, 2);
  CHECK(f.q() == 9);
  CHECK(mult_order(f, f.gamma()) == 8);
  CHECK(trace_of(f, 1) == 2);
  std::size_t kernel = 0;
  for (Element a = 0; a < 9; ++a) kernel += trace_of(f, a) == 0;
  CHECK(kernel == 3);
}

TEST_CASE("characteristic two and bad exponents are rejected") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadInput;
  };
  CHECK_THROWS_AS(build_field(2, 3), Error);
  CHECK(kind_of([] { build_field(2, 3); }) == ErrorKind::NotOddPrime);
  CHECK(kind_of([] { build_field(9, 1); }) == ErrorKind::NotOddPrime);
  CHECK(kind_of([] { build_field(3, 20); }) == ErrorKind::SizeLimit);
  CHECK(kind_of([] { build_field(3, 5, 100); }) == ErrorKind::SizeLimit);
}

TEST_CASE("tables agree with polynomial arithmetic") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {5, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    const FieldTables f = build_field(p, n);
    const auto& mod = f.spec().modulus;
    REQUIRE(mod.size() == n + 1);
    CHECK(mod.back() == 1);
    for (Element a = 0; a < f.q(); ++a) {
      const auto da = digits(a, p, n);
      for (Element b = 0; b < f.q(); b += 1 + f.q() / 40) {
        const auto db = digits(b, p, n);
        std::vector<std::uint32_t> sum(n);
        for (std::uint32_t i = 0; i < n; ++i) sum[i] = (da[i] + db[i]) % p;
        CHECK(f.add(a, b) == code(sum, p));
        if (n == 1) {
          CHECK(f.mul(a, b) == (std::uint64_t{a} * b) % p);
        } else {
          CHECK(f.mul(a, b) == code(poly_mulmod(da, db, mod, p), p));
        }
      }
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("exp and log tables are mutually inverse and gamma is primitive") {
  for (std::uint32_t q : {3u, 11u, 27u, 49u, 81u, 121u, 125u, 343u, 729u, 2187u}) {
    const auto pp = *factor_prime_power(q);
    const FieldTables f = build_field(pp.p, pp.n);
    CAPTURE(q);
    CHECK(mult_order(f, f.gamma()) == q - 1);
    std::set<Element> seen;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      const Element x = f.power_of_gamma(k);
      CHECK(f.log(x) == k);
      seen.insert(x);
    }
    CHECK(seen.size() == q - 1);
    CHECK(!seen.contains(0));
  }
}

TEST_CASE("trace is additive, Frobenius invariant and balanced") {
  for (std::uint32_t q : {9u, 25u, 27u, 81u, 125u}) {
    const auto pp = *factor_prime_power(q);
    const FieldTables f = build_field(pp.p, pp.n);
    std::vector<std::uint32_t> count(f.p(), 0);
    for (Element a = 0; a < q; ++a) {
      ++count[trace_of(f, a)];
      Element frob = 1;
      for (std::uint32_t i = 0; i < f.p(); ++i) frob = f.mul(frob, a);
      CHECK(trace_of(f, frob) == trace_of(f, a));
      const Element b = (a * 7 + 3) % q;
      CHECK(trace_of(f, f.add(a, b)) == (trace_of(f, a) + trace_of(f, b)) % f.p());
    }
    for (std::uint32_t c : count) CHECK(c == q / f.p());
  }
}

TEST_CASE("subgroup cosets") {
  const FieldTables f5 = build_field(5, 1);
  auto c = subgroup_coset(f5, 2, 0);
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<Element>{1, 4});

  const FieldTables f9 = build_field(3, 2);
  const auto s = subgroup_coset(f9, 2, 0);
  CHECK(s.size() == 4);
  CHECK(std::find(s.begin(), s.end(), 1) != s.end());
  CHECK(std::find(s.begin(), s.end(), f9.neg(1)) != s.end());

  const FieldTables f13 = build_field(13, 1);
  const auto c0 = subgroup_coset(f13, 3, 0);
  const auto c1 = subgroup_coset(f13, 3, 1);
  CHECK(c1.size() == 4);
  for (Element x : c1) CHECK(std::find(c0.begin(), c0.end(), x) == c0.end());

  CHECK_THROWS_AS(subgroup_coset(f13, 5, 0), Error);
}

TEST_CASE("cosets of every index partition the nonzero elements") {
  const FieldTables f = build_field(7, 2);
  for (std::uint64_t m : divisors(48)) {
    std::vector<int> hits(49, 0);
    for (std::uint32_t j = 0; j < m; ++j)
      for (Element x : subgroup_coset(f, static_cast<std::uint32_t>(m), j)) ++hits[x];
    CHECK(hits[0] == 0);
    CHECK(std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("subfields") {
  const FieldTables f9 = build_field(3, 2);
  CHECK(subfield_elements(f9, 1) == std::vector<Element>{0, 1, 2});
  auto all = subfield_elements(f9, 2);
  CHECK(all.size() == 9);
  CHECK_THROWS_AS(subfield_elements(f9, 3), Error);

  // Closure of the prime subfield of GF(25), by direct table lookup.
  const FieldTables f25 = build_field(5, 2);
  const auto k = subfield_elements(f25, 1);
  CHECK(k.size() == 5);
  for (Element a : k)
    for (Element b : k) {
      CHECK(std::binary_search(k.begin(), k.end(), f25.add(a, b)));
      CHECK(std::binary_search(k.begin(), k.end(), f25.mul(a, b)));
    }

  const FieldTables f729 = build_field(3, 6);
  for (std::uint32_t t : {1u, 2u, 3u, 6u}) CHECK(subfield_elements(f729, t).size() == ipow(3, t));
}
