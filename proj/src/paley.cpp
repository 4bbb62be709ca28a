#include "paley/paley.hpp"

#include <algorithm>
#include <string>

#include "paley/error.hpp"

namespace paley {

PaleyParams normalize_params(std::uint32_t q, std::uint32_t m) {
  if (q < 3 || m == 0 || (q - 1) % m != 0) {
    throw Error(ErrorKind::BadDivisor, std::to_string(m) + " does not divide " + std::to_string(q) + "-1");
  }
  PaleyParams out;
  out.q = q;
  out.m = m;
  out.r = (q - 1) / m;
  if (out.r % 2 == 0) {
    out.r_bar = out.r;
    out.m_bar = m;
  } else {
    out.r_bar = 2 * out.r;
    out.m_bar = m / 2;
  }
  out.graph_valid = (q - 1) % (2 * m) == 0;
  return out;
}

Graph cayley_graph(const FieldTables& field, std::span<const Element> connection_set) {
  const std::uint32_t q = field.q();
  Graph g(q);
  for (Element u = 0; u < q; ++u) {
    for (Element s : connection_set) g.add_edge(u, field.add(u, s));
  }
  return g;
}

Graph build_paley(const FieldTables& field, std::uint32_t m) {
  if (m < 2) throw Error(ErrorKind::DegenerateM, "generalised Paley graphs need m >= 2");
  const std::uint32_t q = field.q();
  if ((q - 1) % (2 * m) != 0) {
    throw Error(ErrorKind::NotUndirected,
                "2*" + std::to_string(m) + " does not divide " + std::to_string(q - 1));
  }
  const auto connection = subgroup_coset(field, m, 0);
  return cayley_graph(field, connection);
}

OrbitalFamily orbital_family(const FieldTables& field, std::uint32_t m) {
  OrbitalFamily family;
  family.field = &field;
  family.params = normalize_params(field.q(), m);
  family.difference_cosets.reserve(family.params.m_bar);
  for (std::uint32_t i = 0; i < family.params.m_bar; ++i) {
    family.difference_cosets.push_back(subgroup_coset(field, family.params.m_bar, i));
  }
  return family;
}

std::vector<std::uint32_t> mask_to_indices(OrbitalMask mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

OrbitalMask indices_to_mask(std::span<const std::uint32_t> subset) {
  OrbitalMask mask = 0;
  for (std::uint32_t i : subset) {
    if (i >= 64) throw Error(ErrorKind::BadInput, "orbital index out of range");
    mask |= OrbitalMask{1} << i;
  }
  return mask;
}

std::vector<Element> union_connection_set(const OrbitalFamily& family, OrbitalMask mask) {
  const std::uint32_t m_bar = family.m_bar();
  if (mask == 0) throw Error(ErrorKind::EmptySubset, "orbital subset is empty");
  if (m_bar < 64 && (mask >> m_bar) != 0) throw Error(ErrorKind::BadInput, "orbital index out of range");
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < m_bar; ++i) {
    if ((mask >> i) & 1u) {
      const auto& coset = family.difference_cosets[i];
      out.insert(out.end(), coset.begin(), coset.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph union_graph(const OrbitalFamily& family, OrbitalMask mask) {
  const auto connection = union_connection_set(family, mask);
  return cayley_graph(*family.field, connection);
}

Graph union_graph(const OrbitalFamily& family, std::span<const std::uint32_t> subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "orbital subset is empty");
  std::vector<bool> selected(family.m_bar(), false);
  for (std::uint32_t i : subset) {
    if (i >= family.m_bar()) throw Error(ErrorKind::BadInput, "orbital index out of range");
    selected[i] = true;
  }
  std::vector<Element> connection;
  for (std::uint32_t i = 0; i < family.m_bar(); ++i) {
    if (selected[i]) {
      const auto& coset = family.difference_cosets[i];
      connection.insert(connection.end(), coset.begin(), coset.end());
    }
  }
  return cayley_graph(*family.field, connection);
}

std::vector<Vertex> multiplier_map(const FieldTables& field, std::uint32_t i) {
  const Element factor = field.power_of_gamma(i);
  std::vector<Vertex> perm(field.q());
  for (Element v = 0; v < field.q(); ++v) perm[v] = field.mul(v, factor);
  return perm;
}

}  // namespace paley
