#include "paley/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "paley/arith.hpp"
#include "paley/error.hpp"

namespace paley {
namespace {

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return b == 0 ? a : (a + b - 1) / b; }

std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const std::size_t n = g.n_vertices();
  Bitset alive(n);
  alive.set_all();
  std::vector<Vertex> out;
  while (alive.any()) {
    std::size_t best = n;
    std::size_t best_deg = 0;
    for (std::size_t v = alive.first(); v < n; v = alive.next(v + 1)) {
      Bitset nb = g.neighbors(static_cast<Vertex>(v));
      nb &= alive;
      const std::size_t d = nb.count();
      if (best == n || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    out.push_back(static_cast<Vertex>(best));
    alive.reset(best);
    alive.subtract(g.neighbors(static_cast<Vertex>(best)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool color_backtrack(const std::vector<std::uint32_t>& adj, std::uint32_t n, std::uint32_t k, std::uint32_t v,
                     std::uint32_t used, std::vector<std::uint32_t>& color) {
  if (v == n) return true;
  for (std::uint32_t c = 0; c < std::min(used + 1, k); ++c) {
    bool ok = true;
    for (std::uint32_t u = 0; u < v; ++u) {
      if (((adj[v] >> u) & 1u) && color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (color_backtrack(adj, n, k, v + 1, std::max(used, c + 1), color)) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> InvariantCertificate::clique_equals_chromatic() const noexcept {
  if (chi_bounds.lo > omega_bounds.hi) return false;
  if (chi_bounds.hi == omega_bounds.lo) return true;
  if (omega_bounds.exact() && chi_bounds.exact()) return omega_bounds.lo == chi_bounds.lo;
  return std::nullopt;
}

bool verify_certificate(const Graph& g, const InvariantCertificate& cert) {
  if (cert.clique.size() != cert.omega || !is_clique(g, cert.clique)) return false;
  if (cert.independent_set.size() != cert.alpha || !is_independent_set(g, cert.independent_set)) return false;
  if (!is_proper_coloring(g, cert.coloring)) return false;
  if (g.n_vertices() > 0 && color_count(cert.coloring) != cert.chi) return false;
  if (cert.omega > cert.chi) return false;
  for (const Bounds& b : {cert.omega_bounds, cert.alpha_bounds, cert.chi_bounds}) {
    if (b.lo > b.hi) return false;
  }
  return cert.omega_bounds.lo == cert.omega && cert.alpha_bounds.lo == cert.alpha &&
         cert.chi_bounds.hi == cert.chi;
}

InvariantCertificate compute_invariants(const Graph& g, const InvariantOptions& options) {
  InvariantCertificate cert;
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n == 0) return cert;
  std::uint64_t used = 0;
  auto remaining = [&] { return options.node_budget > used ? options.node_budget - used : 0; };

  const CliqueResult omega = clique_number(g, 0, options.clique_upper_hint, {remaining(), options.anchors});
  used += omega.nodes;
  cert.clique = omega.witness;
  cert.omega = omega.size();
  cert.omega_bounds = omega.bounds;

  auto finish = [&] {
    cert.status = (cert.omega_bounds.exact() && cert.alpha_bounds.exact() && cert.chi_bounds.exact())
                      ? SearchStatus::Exact
                      : SearchStatus::Timeout;
    return cert;
  };

  if (options.stop_when_decided && options.chi_lower_hint > cert.omega_bounds.hi) {
    cert.independent_set = greedy_independent_set(g);
    cert.alpha = static_cast<std::uint32_t>(cert.independent_set.size());
    cert.alpha_bounds = {cert.alpha, std::max(cert.alpha, std::min(options.alpha_upper_hint, n))};
    cert.coloring = greedy_coloring(g);
    cert.chi = color_count(cert.coloring);
    const std::uint32_t lo = std::max({options.chi_lower_hint, cert.omega, ceil_div(n, cert.alpha_bounds.hi)});
    cert.chi_bounds = {std::min(lo, cert.chi), cert.chi};
    return finish();
  }

  const Graph comp = complement(g);
  const CliqueResult alpha = clique_number(comp, 0, options.alpha_upper_hint, {remaining(), options.complement_anchors});
  used += alpha.nodes;
  cert.independent_set = alpha.witness;
  cert.alpha = alpha.size();
  cert.alpha_bounds = alpha.bounds;

  cert.coloring = greedy_coloring(g);
  if (options.cayley_field != nullptr && std::uint64_t{cert.omega} * cert.alpha == n) {
    if (auto tc = translate_coloring(*options.cayley_field, g, cert.clique, cert.independent_set)) {
      if (color_count(*tc) < color_count(cert.coloring)) cert.coloring = std::move(*tc);
    }
  }
  cert.chi = color_count(cert.coloring);
  std::uint32_t lo = std::max({options.chi_lower_hint, cert.omega, ceil_div(n, cert.alpha_bounds.hi)});
  cert.chi_bounds = {std::min(lo, cert.chi), cert.chi};
  if (options.stop_when_decided && cert.clique_equals_chromatic().has_value()) return finish();

  if (options.exact_chromatic && !cert.chi_bounds.exact()) {
    ColoringOptions co;
    co.node_budget = remaining();
    co.initial_coloring = cert.coloring;
    co.clique = cert.clique;
    const ColoringResult chi = chromatic_number(g, cert.chi_bounds.lo, cert.chi, co);
    if (chi.colors() <= cert.chi) {
      cert.coloring = chi.coloring;
      cert.chi = chi.colors();
    }
    cert.chi_bounds = {std::max(cert.chi_bounds.lo, std::min(chi.bounds.lo, cert.chi)), cert.chi};
  }
  return finish();
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> product_certificate(
    const Graph& g, std::span<const Vertex> clique, std::span<const Vertex> independent_set) {
  if (!is_clique(g, clique)) throw Error(ErrorKind::InvalidWitness, "clique is not pairwise adjacent");
  if (!is_independent_set(g, independent_set)) {
    throw Error(ErrorKind::InvalidWitness, "independent set is not pairwise non-adjacent");
  }
  if (clique.size() * independent_set.size() != g.n_vertices()) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(clique.size()), static_cast<std::uint32_t>(independent_set.size())};
}

std::optional<std::vector<Vertex>> subfield_clique(const FieldTables& field, std::uint32_t m, std::uint32_t t) {
  const std::uint32_t q = field.q();
  if (m == 0 || (q - 1) % (2 * m) != 0) {
    throw Error(ErrorKind::BadDivisor, "2*" + std::to_string(m) + " does not divide " + std::to_string(q - 1));
  }
  if (t == 0 || field.n() % t != 0) {
    throw Error(ErrorKind::BadDivisor, std::to_string(t) + " does not divide " + std::to_string(field.n()));
  }
  const std::uint64_t sub = ipow(field.p(), t) - 1;
  if (((q - 1) / m) % sub != 0) return std::nullopt;
  return subfield_elements(field, t);
}

std::optional<std::vector<std::uint32_t>> translate_coloring(const FieldTables& field, const Graph& g,
                                                           std::span<const Vertex> clique,
                                                           std::span<const Vertex> independent_set) {
  const std::uint32_t q = field.q();
  if (g.n_vertices() != q || std::uint64_t{clique.size()} * independent_set.size() != q) return std::nullopt;
  std::vector<std::uint32_t> coloring(q, UINT32_MAX);
  for (std::uint32_t i = 0; i < clique.size(); ++i) {
    for (Vertex a : independent_set) {
      const Element v = field.add(clique[i], a);
      if (coloring[v] != UINT32_MAX) return std::nullopt;
      coloring[v] = i;
    }
  }
  if (!is_proper_coloring(g, coloring)) return std::nullopt;
  return normalize_coloring(coloring);
}

InvariantCertificate brute_force_invariants(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceeds the oracle cap of 16");
  }
  InvariantCertificate cert;
  if (n == 0) return cert;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) adj[u] |= 1u << v;
    }
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint8_t> is_cl(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> is_ind(std::size_t{1} << n, 0);
  is_cl[0] = is_ind[0] = 1;
  std::uint32_t best_cl = 0;
  std::uint32_t best_ind = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    is_cl[mask] = is_cl[rest] && (adj[low] & rest) == rest;
    is_ind[mask] = is_ind[rest] && (adj[low] & rest) == 0;
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (is_cl[mask] && size > static_cast<std::uint32_t>(std::popcount(best_cl))) best_cl = mask;
    if (is_ind[mask] && size > static_cast<std::uint32_t>(std::popcount(best_ind))) best_ind = mask;
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((best_cl >> v) & 1u) cert.clique.push_back(v);
    if ((best_ind >> v) & 1u) cert.independent_set.push_back(v);
  }
  cert.omega = static_cast<std::uint32_t>(cert.clique.size());
  cert.alpha = static_cast<std::uint32_t>(cert.independent_set.size());

  std::vector<std::uint32_t> color(n, 0);
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (color_backtrack(adj, n, k, 0, 0, color)) {
      cert.chi = k;
      break;
    }
  }
  cert.coloring = normalize_coloring(color);
  cert.omega_bounds = {cert.omega, cert.omega};
  cert.alpha_bounds = {cert.alpha, cert.alpha};
  cert.chi_bounds = {cert.chi, cert.chi};
  cert.status = SearchStatus::Exact;
  return cert;
}

}  // namespace paley
