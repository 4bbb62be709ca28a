#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "paley/gf.hpp"
#include "paley/graph.hpp"

namespace paley {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint32_t kBruteForceMaxVertices = 16;

enum class SearchStatus { Exact, Timeout };

/// Closed interval [lo, hi] known to contain an invariant.
struct Bounds {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  bool exact() const noexcept { return lo == hi; }
};

struct CliqueOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Vertex sets of which at least one is contained in some maximum clique,
  /// as guaranteed by the caller through graph symmetry (e.g. {0} for a
  /// vertex-transitive graph). Empty means an unrestricted search.
  std::vector<std::vector<Vertex>> anchors;
};

struct CliqueResult {
  /// Witness sorted ascending; its size is the best clique found.
  std::vector<Vertex> witness;
  SearchStatus status = SearchStatus::Exact;
  Bounds bounds;
  std::uint64_t nodes = 0;

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(witness.size()); }
  bool exact() const noexcept { return status == SearchStatus::Exact; }
};

/// Exact maximum clique by bitset branch and bound with greedy colouring
/// bounds over a degeneracy ordering. Hints only prune: an upper hint ends the
/// search once reached, a wrong lower hint triggers a full re-search.
/// On budget exhaustion returns status Timeout with the best bounds known.
CliqueResult clique_number(const Graph& g, std::uint32_t lower_hint = 0,
                           std::uint32_t upper_hint = UINT32_MAX, const CliqueOptions& options = {});

/// Maximum independent set as a maximum clique of the complement; the
/// anchors in `options` refer to the complement.
CliqueResult independence_number(const Graph& g, std::uint32_t upper_hint = UINT32_MAX,
                                 const CliqueOptions& options = {});

struct ColoringOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Known proper colouring used as the starting upper bound.
  std::optional<std::vector<std::uint32_t>> initial_coloring;
  /// Known clique to precolour; computed when absent.
  std::optional<std::vector<Vertex>> clique;
};

struct ColoringResult {
  /// coloring[v] in [0, colors); colours numbered by first appearance.
  std::vector<std::uint32_t> coloring;
  SearchStatus status = SearchStatus::Exact;
  Bounds bounds;
  std::uint64_t nodes = 0;

  std::uint32_t colors() const noexcept;
  bool exact() const noexcept { return status == SearchStatus::Exact; }
};

/// DSATUR greedy colouring; smallest index breaks ties.
std::vector<std::uint32_t> greedy_coloring(const Graph& g);

/// Relabels colours by first appearance in vertex order.
std::vector<std::uint32_t> normalize_coloring(std::span<const std::uint32_t> coloring);

enum class Colorability { Yes, No, Timeout };

struct ColorabilityResult {
  Colorability answer = Colorability::Timeout;
  std::vector<std::uint32_t> coloring;
  std::uint64_t nodes = 0;
};

/// Exact k-colourability by DSATUR backtracking; `precolor` is a clique whose
/// vertices receive colours 0, 1, ... in order.
ColorabilityResult k_colorable(const Graph& g, std::uint32_t k, std::span<const Vertex> precolor,
                               std::uint64_t node_budget);

/// Tabu search for a proper k-colouring; deterministic for a given seed.
std::optional<std::vector<std::uint32_t>> tabu_coloring(const Graph& g, std::uint32_t k, std::uint64_t max_iterations,
                                                        std::uint32_t seed = 1);

/// Exact chromatic number, testing k upward from max(lower, omega).
/// `upper` of 0 means "use the greedy bound".
ColoringResult chromatic_number(const Graph& g, std::uint32_t lower = 0, std::uint32_t upper = 0,
                                const ColoringOptions& options = {});

/// Exact clique number, independence number and chromatic number with witnesses.
struct InvariantCertificate {
  std::uint32_t omega = 0;
  std::uint32_t alpha = 0;
  std::uint32_t chi = 0;
  std::vector<Vertex> clique;
  std::vector<Vertex> independent_set;
  std::vector<std::uint32_t> coloring;
  SearchStatus status = SearchStatus::Exact;
  Bounds omega_bounds;
  Bounds alpha_bounds;
  Bounds chi_bounds;

  bool exact() const noexcept { return status == SearchStatus::Exact; }
  /// Settled whenever the bounds separate or pin omega and chi together.
  std::optional<bool> clique_equals_chromatic() const noexcept;
};

/// Validates a certificate's witnesses against g; returns false on any inconsistency.
bool verify_certificate(const Graph& g, const InvariantCertificate& cert);

struct InvariantOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::vector<std::vector<Vertex>> anchors;
  std::vector<std::vector<Vertex>> complement_anchors;
  std::uint32_t clique_upper_hint = UINT32_MAX;
  std::uint32_t alpha_upper_hint = UINT32_MAX;
  std::uint32_t chi_lower_hint = 0;
  /// When set, g is a Cayley graph of (F_q, +) and clique + independent set
  /// translates may supply an optimal colouring.
  const FieldTables* cayley_field = nullptr;
  /// Run the exact colouring search when the bounds do not meet.
  bool exact_chromatic = true;
  /// Return as soon as clique_equals_chromatic() is settled.
  bool stop_when_decided = false;
};

InvariantCertificate compute_invariants(const Graph& g, const InvariantOptions& options = {});

/// For vertex-transitive g: if |clique| * |independent_set| = n, these sizes are
/// omega and alpha. Throws InvalidWitness if a set fails its adjacency condition.
std::optional<std::pair<std::uint32_t, std::uint32_t>> product_certificate(
    const Graph& g, std::span<const Vertex> clique, std::span<const Vertex> independent_set);

/// The subfield GF(p^t) when its nonzero elements are m-th powers, which makes
/// it a clique of the generalised Paley graph. Throws BadDivisor unless
/// 2m | q-1 and t | n.
std::optional<std::vector<Vertex>> subfield_clique(const FieldTables& field, std::uint32_t m,
                                                   std::uint32_t t);

/// Colouring of a Cayley graph of (F_q, +) from a clique C and independent set
/// A with |C||A| = q: vertex c_i + a gets colour i. Nullopt if C + A does not
/// cover F_q exactly once or the result is improper.
std::optional<std::vector<std::uint32_t>> translate_coloring(const FieldTables& field, const Graph& g,
                                                           std::span<const Vertex> clique,
                                                           std::span<const Vertex> independent_set);

/// Exhaustive oracle: omega and alpha over all 2^n subsets, chi by plain
/// backtracking for k = 1, 2, .... Throws TooLarge above 16 vertices.
InvariantCertificate brute_force_invariants(const Graph& g);

}  // namespace paley
