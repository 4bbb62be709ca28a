#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "paley/arith.hpp"
#include "paley/error.hpp"
#include "paley/gf.hpp"
#include "paley/invariants.hpp"
#include "paley/paley.hpp"

using namespace paley;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph random_graph(std::size_t n, double density, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

FieldTables field(std::uint32_t q) {
  const auto pp = *factor_prime_power(q);
  return build_field(pp.p, pp.n);
}

// Largest clique by scanning every vertex subset.
std::uint32_t subset_clique_number(const Graph& g) {
  const std::size_t n = g.n_vertices();
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

bool colour_rec(const Graph& g, std::uint32_t k, std::vector<std::uint32_t>& c, Vertex v) {
  if (v == g.n_vertices()) return true;
  for (std::uint32_t x = 0; x < k; ++x) {
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[u] == x);
    if (!ok) continue;
    c[v] = x;
    if (colour_rec(g, k, c, v + 1)) return true;
  }
  return false;
}

// Smallest k admitting a colouring, by plain vertex-order backtracking.
std::uint32_t naive_chromatic_number(const Graph& g) {
  std::vector<std::uint32_t> c(g.n_vertices(), 0);
  for (std::uint32_t k = 1;; ++k)
    if (colour_rec(g, k, c, 0)) return k;
}

void check_certificate(const Graph& g, const InvariantCertificate& cert) {
  CHECK(cert.exact());
  CHECK(verify_certificate(g, cert));
  CHECK(cert.clique.size() == cert.omega);
  CHECK(cert.independent_set.size() == cert.alpha);
  CHECK(color_count(cert.coloring) == cert.chi);
}

}  // namespace

TEST_CASE("five-cycle") {
  const Graph c5 = cycle(5);
  CHECK(clique_number(c5).size() == 2);
  CHECK(independence_number(c5).size() == 2);
  const ColoringResult col = chromatic_number(c5);
  CHECK(col.colors() == 3);
  CHECK(is_proper_coloring(c5, col.coloring));
}

TEST_CASE("Gamma_{9,2} has omega = alpha = chi = 3") {
  const FieldTables f = field(9);
  const Graph g = build_paley(f, 2);
  CHECK(clique_number(g).size() == 3);
  CHECK(independence_number(g).size() == 3);
  CHECK(chromatic_number(g).colors() == 3);
}

TEST_CASE("Gamma_{13,2} against subset enumeration") {
  const Graph g = build_paley(field(13), 2);
  // Frozen from subset_clique_number over all 2^13 subsets.
  CHECK(subset_clique_number(g) == 3);
  CHECK(subset_clique_number(complement(g)) == 3);
  const CliqueResult w = clique_number(g);
  CHECK(w.size() == 3);
  CHECK(is_clique(g, w.witness));
  const CliqueResult a = independence_number(g);
  CHECK(a.size() == 3);
  CHECK(is_independent_set(g, a.witness));
}

TEST_CASE("Gamma_{13,2} is 5-chromatic") {
  const Graph g = build_paley(field(13), 2);
  // ceil(13 / 3) = 5 bounds chi from below.
  const ColoringResult col = chromatic_number(g);
  CHECK(col.colors() == 5);
  CHECK(col.exact());
  CHECK(is_proper_coloring(g, col.coloring));
  CHECK(naive_chromatic_number(g) == 5);
  const InvariantCertificate bf = brute_force_invariants(g);
  CHECK(bf.omega == 3);
  CHECK(bf.alpha == 3);
  CHECK(bf.chi == 5);
}

TEST_CASE("brute force on trivial graphs") {
  const InvariantCertificate empty = brute_force_invariants(Graph(4));
  CHECK(empty.omega == 1);
  CHECK(empty.alpha == 4);
  CHECK(empty.chi == 1);
  const InvariantCertificate k4 = brute_force_invariants(Graph::complete(4));
  CHECK(k4.omega == 4);
  CHECK(k4.alpha == 1);
  CHECK(k4.chi == 4);
  CHECK_THROWS_AS(brute_force_invariants(Graph(17)), Error);
}

TEST_CASE("solver matches the independent oracles on random graphs") {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    const double density = 0.2 + 0.6 * (seed % 5) / 4.0;
    const Graph g = random_graph(11, density, seed);
    CAPTURE(seed);
    const InvariantCertificate cert = compute_invariants(g);
    check_certificate(g, cert);
    CHECK(cert.omega == subset_clique_number(g));
    CHECK(cert.alpha == subset_clique_number(complement(g)));
    CHECK(cert.chi == naive_chromatic_number(g));
    const InvariantCertificate bf = brute_force_invariants(g);
    CHECK(bf.omega == cert.omega);
    CHECK(bf.alpha == cert.alpha);
    CHECK(bf.chi == cert.chi);
  }
}

TEST_CASE("hints never change exact answers") {
  const Graph g = random_graph(40, 0.5, 7);
  const std::uint32_t omega = clique_number(g).size();
  CHECK(clique_number(g, omega).size() == omega);
  CHECK(clique_number(g, omega + 3).size() == omega);
  CHECK(clique_number(g, 0, omega).size() == omega);
  const ColoringResult col = chromatic_number(g);
  CHECK(col.exact());
  CHECK(is_proper_coloring(g, col.coloring));
  CHECK(col.colors() >= omega);
}

TEST_CASE("budget exhaustion reports bounds instead of a wrong answer") {
  const Graph g = random_graph(120, 0.7, 3);
  CliqueOptions o;
  o.node_budget = 50;
  const CliqueResult r = clique_number(g, 0, UINT32_MAX, o);
  CHECK(r.status == SearchStatus::Timeout);
  CHECK(r.bounds.lo <= r.bounds.hi);
  CHECK(r.bounds.lo == r.size());
  CHECK(is_clique(g, r.witness));
  const CliqueResult full = clique_number(g);
  CHECK(full.exact());
  CHECK(full.size() >= r.bounds.lo);
  CHECK(full.size() <= r.bounds.hi);

  ColoringOptions co;
  co.node_budget = 5;
  const ColoringResult c = chromatic_number(g, 0, 0, co);
  CHECK(is_proper_coloring(g, c.coloring));
  CHECK(c.bounds.lo <= c.bounds.hi);
  CHECK(c.bounds.hi == c.colors());
}

TEST_CASE("k-colourability") {
  const Graph c5 = cycle(5);
  const std::vector<Vertex> edge{0, 1};
  CHECK(k_colorable(c5, 2, edge, 1000).answer == Colorability::No);
  const ColorabilityResult yes = k_colorable(c5, 3, edge, 1000);
  CHECK(yes.answer == Colorability::Yes);
  CHECK(is_proper_coloring(c5, yes.coloring));
  CHECK(color_count(yes.coloring) <= 3);
}

TEST_CASE("greedy colourings are proper") {
  for (std::uint32_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_graph(60, 0.3, seed);
    const auto c = greedy_coloring(g);
    CHECK(is_proper_coloring(g, c));
    const auto n = normalize_coloring(c);
    CHECK(is_proper_coloring(g, n));
    CHECK(color_count(n) == color_count(c));
    CHECK(*std::max_element(n.begin(), n.end()) + 1 == color_count(n));
  }
}

TEST_CASE("product certificates") {
  const FieldTables f = field(9);
  const Graph g = build_paley(f, 2);
  const auto clique = subfield_clique(f, 2, 1);
  REQUIRE(clique);
  CHECK(clique->size() == 3);
  const CliqueResult indep = independence_number(g);
  const auto pc = product_certificate(g, *clique, indep.witness);
  REQUIRE(pc);
  CHECK(pc->first == 3);
  CHECK(pc->second == 3);

  const Graph c5 = cycle(5);
  CHECK(!product_certificate(c5, std::vector<Vertex>{0, 1}, std::vector<Vertex>{0, 2}));
  CHECK_THROWS_AS(product_certificate(c5, std::vector<Vertex>{0, 2}, std::vector<Vertex>{0, 2}), Error);

  const auto one = product_certificate(Graph(1), std::vector<Vertex>{0}, std::vector<Vertex>{0});
  REQUIRE(one);
  CHECK(*one == std::pair<std::uint32_t, std::uint32_t>{1, 1});
}

TEST_CASE("subfield cliques") {
  const auto c25 = subfield_clique(field(25), 3, 1);
  REQUIRE(c25);
  CHECK(c25->size() == 5);
  CHECK(is_clique(build_paley(field(25), 3), *c25));
  CHECK(!subfield_clique(field(49), 3, 1));
  CHECK_THROWS_AS(subfield_clique(field(49), 5, 1), Error);
  CHECK_THROWS_AS(subfield_clique(field(49), 3, 3), Error);
}

TEST_CASE("translate colourings of Cayley graphs") {
  const FieldTables f = field(81);
  const Graph g = build_paley(f, 2);
  const auto clique = subfield_clique(f, 2, 2);
  REQUIRE(clique);
  const CliqueResult indep = independence_number(g);
  REQUIRE(clique->size() * indep.size() == 81);
  const auto col = translate_coloring(f, g, *clique, indep.witness);
  REQUIRE(col);
  CHECK(is_proper_coloring(g, *col));
  CHECK(color_count(*col) == 9);
}

TEST_CASE("invariant certificates on Paley graphs") {
  for (std::uint32_t q : {9u, 13u, 17u, 25u, 29u, 37u, 41u, 49u}) {
    const FieldTables f = field(q);
    for (std::uint64_t m : divisors(q - 1)) {
      if (m < 2 || (q - 1) % (2 * m) != 0) continue;
      const Graph g = build_paley(f, static_cast<std::uint32_t>(m));
      InvariantOptions o;
      o.cayley_field = &f;
      const InvariantCertificate cert = compute_invariants(g, o);
      CAPTURE(q);
      CAPTURE(m);
      check_certificate(g, cert);
      CHECK(cert.omega <= cert.chi);
      CHECK(cert.chi * cert.alpha >= q);
      // Vertex-transitive graphs satisfy omega * alpha <= n.
      CHECK(cert.omega * cert.alpha <= q);
    }
  }
}

TEST_CASE("certificate verification rejects tampering") {
  const Graph g = build_paley(field(13), 2);
  InvariantCertificate cert = compute_invariants(g);
  REQUIRE(verify_certificate(g, cert));
  InvariantCertificate bad = cert;
  bad.coloring[0] = bad.coloring[1] = 0;
  if (g.adjacent(0, 1)) CHECK(!verify_certificate(g, bad));
  bad = cert;
  bad.omega = 4;
  CHECK(!verify_certificate(g, bad));
}

TEST_CASE("tabu colouring") {
  const FieldTables f = field(61);
  const Graph g = build_paley(f, 3);
  const auto col = tabu_coloring(g, 8, 200000, 7);
  REQUIRE(col);
  CHECK(is_proper_coloring(g, *col));
  CHECK(color_count(*col) <= 8);
  CHECK(tabu_coloring(g, 8, 200000, 7) == col);
  // omega = 3, so no search can succeed with two colours.
  CHECK(!tabu_coloring(g, 2, 2000, 7));
  CHECK(!tabu_coloring(cycle(5), 2, 1000));
  CHECK(tabu_coloring(cycle(5), 3, 1000));
}
