#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "paley/gf.hpp"
#include "paley/graph.hpp"

namespace paley {

/// (r, m) and the normalised pair (r_bar, m_bar) with r_bar even.
struct PaleyParams {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::uint32_t r = 0;
  std::uint32_t r_bar = 0;
  std::uint32_t m_bar = 0;
  /// 2m | q-1, so the connection set S_{q,m} is closed under negation.
  bool graph_valid = false;
};

/// Throws BadDivisor unless m >= 1 and m | q-1.
PaleyParams normalize_params(std::uint32_t q, std::uint32_t m);

/// Cayley graph of (F_q, +): u ~ v iff u - v lies in `connection_set`.
/// The set must be negation-closed and exclude 0.
Graph cayley_graph(const FieldTables& field, std::span<const Element> connection_set);

/// Generalised Paley graph: u ~ v iff u - v is a nonzero m-th power.
/// Throws DegenerateM for m < 2 and NotUndirected unless 2m | q-1.
Graph build_paley(const FieldTables& field, std::uint32_t m);

/// The m_bar undirected orbitals of the affine group with multipliers S_{q,m},
/// each stored by its difference coset S_{q,m_bar} gamma^i.
///
/// Holds a non-owning reference to `field`, which must outlive the family.
struct OrbitalFamily {
  const FieldTables* field = nullptr;
  PaleyParams params;
  std::vector<std::vector<Element>> difference_cosets;

  std::uint32_t m_bar() const noexcept { return params.m_bar; }
};

OrbitalFamily orbital_family(const FieldTables& field, std::uint32_t m);

/// Orbital indices encoded as a bitmask (bit i selects orbital i).
using OrbitalMask = std::uint64_t;

/// Graph whose edges are the union of the selected orbitals.
/// Throws EmptySubset for an empty subset and BadInput for out-of-range indices.
Graph union_graph(const OrbitalFamily& family, std::span<const std::uint32_t> subset);
Graph union_graph(const OrbitalFamily& family, OrbitalMask mask);

std::vector<std::uint32_t> mask_to_indices(OrbitalMask mask);
OrbitalMask indices_to_mask(std::span<const std::uint32_t> subset);

/// Difference set of a union: the nonzero elements whose coset index is selected.
std::vector<Element> union_connection_set(const OrbitalFamily& family, OrbitalMask mask);

/// v -> v * gamma^i on element codes; fixes 0.
std::vector<Vertex> multiplier_map(const FieldTables& field, std::uint32_t i);

}  // namespace paley
