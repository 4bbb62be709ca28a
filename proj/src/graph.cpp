#include "paley/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace paley {

void Bitset::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  if (const std::size_t tail = size_ % kWordBits; tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

std::size_t Bitset::next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool Bitset::intersects(const Bitset& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::vector<Vertex> Bitset::to_vector() const {
  std::vector<Vertex> out;
  for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(static_cast<Vertex>(i));
  return out;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.rows_[v].set_all();
    g.rows_[v].reset(v);
  }
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (std::size_t v = rows_[u].next(u + 1); v < n_; v = rows_[u].next(v + 1)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

long Graph::regular_degree() const noexcept {
  if (n_ == 0) return 0;
  const std::size_t d = rows_[0].count();
  for (const auto& row : rows_) {
    if (row.count() != d) return -1;
  }
  return static_cast<long>(d);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.n_vertices();
  Graph out = Graph::complete(n);
  for (Vertex u = 0; u < n; ++u) out.rows_[u].subtract(g.neighbors(u));
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  Graph out(g.n_vertices());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) noexcept {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) noexcept {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> coloring) noexcept {
  if (coloring.size() != g.n_vertices()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::uint32_t color_count(std::span<const std::uint32_t> coloring) {
  std::unordered_set<std::uint32_t> seen(coloring.begin(), coloring.end());
  return static_cast<std::uint32_t>(seen.size());
}

}  // namespace paley
