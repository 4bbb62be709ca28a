#include <doctest.h>

#include <vector>

#include "paley/arith.hpp"
#include "paley/classify.hpp"
#include "paley/error.hpp"

using namespace paley;

namespace {

FieldTables field(std::uint32_t q) {
  const auto pp = *factor_prime_power(q);
  return build_field(pp.p, pp.n);
}

}  // namespace

TEST_CASE("primitivity") {
  CHECK(primitivity(9, 2));
  CHECK(!primitivity(9, 4));
  CHECK(primitivity(13, 3));
  CHECK(!primitivity(49, 8));
  CHECK(primitivity(49, 6));
}

TEST_CASE("fast paths") {
  const auto c27 = fast_paths(27, 2);
  REQUIRE(c27);
  CHECK(c27->verdict == Verdict::Synchronizing);

  const auto c125 = fast_paths(125, 2);
  REQUIRE(c125);
  CHECK(c125->verdict == Verdict::Synchronizing);
  CHECK(c125->rule == "Thm 5.2(5)");

  const auto c9 = fast_paths(9, 2);
  REQUIRE(c9);
  CHECK(c9->verdict == Verdict::NonSynchronizing);
  CHECK(c9->rule == "Thm 5.2(6)");

  const auto imp = fast_paths(9, 4);
  REQUIRE(imp);
  CHECK(imp->verdict == Verdict::NonSynchronizing);
  CHECK(imp->rule == "Lemma 3.1 imprimitive");

  const auto hom = fast_paths(11, 2);
  REQUIRE(hom);
  CHECK(hom->verdict == Verdict::Synchronizing);
  CHECK(hom->rule == "2-homogeneous");

  const auto prime = fast_paths(13, 3);
  REQUIRE(prime);
  CHECK(prime->verdict == Verdict::Synchronizing);
  CHECK(prime->rule == "Lemma 2.1(1) prime degree");

  const auto g81 = fast_paths(81, 5);
  REQUIRE(g81);
  CHECK(g81->verdict == Verdict::NonSynchronizing);
  CHECK(g81->rule == "Thm 5.2(4)");

  const auto c49 = fast_paths(49, 3);
  REQUIRE(c49);
  CHECK(c49->verdict == Verdict::Synchronizing);
  const auto c25 = fast_paths(25, 3);
  REQUIRE(c25);
  CHECK(c25->verdict == Verdict::NonSynchronizing);

  // 1 + 7 + 49 = 57 is divisible by 3, so nothing settles (343, 3) arithmetically.
  CHECK(!fast_paths(343, 3));
  // 7^5: n prime and 3 does not divide 1 + 7 + ... + 7^4 = 2801.
  const auto c7_5 = fast_paths(16807, 3);
  REQUIRE(c7_5);
  CHECK(c7_5->verdict == Verdict::Synchronizing);
  CHECK(c7_5->rule == "Thm 5.2(3)");
}

TEST_CASE("exhaustive decision agrees with the fast paths") {
  struct Case {
    std::uint32_t q, m;
  };
  for (const Case c : std::vector<Case>{{9, 2}, {13, 2}, {13, 3}, {13, 4}, {13, 6}, {17, 4}, {25, 2}, {25, 3}, {25, 4},
                                        {25, 6}, {29, 7}, {31, 5}, {37, 6}, {49, 3}, {49, 4}, {49, 6}, {81, 5}}) {
    CAPTURE(c.q);
    CAPTURE(c.m);
    const auto fast = fast_paths(c.q, c.m);
    REQUIRE(fast);
    ClassifyOptions o;
    o.use_spectral_filter = false;
    const Classification ex = exhaustive_decision(field(c.q), c.m, o);
    CHECK(ex.status == ClassifyStatus::Complete);
    CHECK(ex.verdict == fast->verdict);
    if (ex.verdict == Verdict::NonSynchronizing && ex.witness) {
      CHECK(ex.witness->certificate.omega == ex.witness->certificate.chi);
    }
  }
}

TEST_CASE("classification witnesses verify") {
  const FieldTables f = field(25);
  const Classification c = exhaustive_decision(f, 2);
  REQUIRE(c.verdict == Verdict::NonSynchronizing);
  REQUIRE(c.witness);
  const OrbitalFamily fam = orbital_family(f, 2);
  const Graph g = union_graph(fam, std::span<const std::uint32_t>(c.witness->subset));
  CHECK(verify_certificate(g, c.witness->certificate));
  CHECK(c.witness->certificate.omega == 5);
  CHECK(c.witness->certificate.chi == 5);
}

TEST_CASE("single graph check") {
  const Classification c13 = single_graph_check(field(13), 2);
  CHECK(c13.verdict == Verdict::Synchronizing);
  CHECK(c13.rule == "Thm 5.2(2)");
  const Classification c9 = single_graph_check(field(9), 2);
  CHECK(c9.verdict == Verdict::NonSynchronizing);
  REQUIRE(c9.witness);
  CHECK(c9.witness->certificate.omega == 3);
  CHECK_THROWS_AS(single_graph_check(field(13), 4), Error);
}

TEST_CASE("classify rejects invalid input") {
  CHECK_THROWS_AS(classify(15, 2), Error);
  CHECK_THROWS_AS(classify(13, 5), Error);
  CHECK_THROWS_AS(classify(16, 3), Error);
}

TEST_CASE("classify reports budget exhaustion") {
  ClassifyOptions o;
  o.budget = 1;
  o.use_spectral_filter = false;
  o.use_ratio_bounds = false;
  const Classification c = exhaustive_decision(field(61), 5, o);
  if (c.verdict == Verdict::Unknown) CHECK(c.status == ClassifyStatus::BudgetExhausted);
}

TEST_CASE("exhaustive cap") {
  ClassifyOptions o;
  o.max_exhaustive_orbitals = 3;
  const Classification c = exhaustive_decision(field(121), 5, o);
  CHECK(c.verdict == Verdict::Unknown);
  CHECK(c.status == ClassifyStatus::SkippedExhaustive);
}

TEST_CASE("every classification is consistent with primitivity") {
  for (std::uint32_t q = 3; q <= 81; q += 2) {
    if (!factor_prime_power(q)) continue;
    for (std::uint64_t m : divisors(q - 1)) {
      const Classification c = classify(q, static_cast<std::uint32_t>(m));
      CAPTURE(q);
      CAPTURE(m);
      CHECK(c.verdict != Verdict::Unknown);
      CHECK(c.primitive == primitivity(q, static_cast<std::uint32_t>(m)));
      if (!c.primitive) CHECK(c.verdict == Verdict::NonSynchronizing);
      CHECK(!c.rule.empty());
      CHECK(!c.reasons.empty());
    }
  }
}
