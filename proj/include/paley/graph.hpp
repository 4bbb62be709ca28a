#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace paley {

using Vertex = std::uint32_t;

/// Fixed-width bitset over vertex indices.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all() noexcept;
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  /// Smallest set index >= from, or size() if none.
  std::size_t next(std::size_t from) const noexcept;
  std::size_t first() const noexcept { return next(0); }

  Bitset& operator&=(const Bitset& o) noexcept;
  Bitset& operator|=(const Bitset& o) noexcept;
  /// this &= ~o
  Bitset& subtract(const Bitset& o) noexcept;
  bool intersects(const Bitset& o) const noexcept;

  std::vector<Vertex> to_vector() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

  static Graph complete(std::size_t n);

  std::size_t n_vertices() const noexcept { return n_; }
  const Bitset& neighbors(Vertex v) const noexcept { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }
  std::size_t edge_count() const noexcept;

  /// Adds {u, v}; self loops are ignored.
  void add_edge(Vertex u, Vertex v) noexcept {
    if (u == v) return;
    rows_[u].set(v);
    rows_[v].set(u);
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Common degree, or -1 if the graph is not regular.
  long regular_degree() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph complement(const Graph& g);

  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

Graph complement(const Graph& g);

/// Image of g under v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Subgraph induced on `keep`, vertices renumbered 0..keep.size()-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_clique(const Graph& g, std::span<const Vertex> vertices) noexcept;
bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) noexcept;
/// coloring[v] is the colour of v; proper means adjacent vertices differ.
bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> coloring) noexcept;
/// Number of distinct colours used.
std::uint32_t color_count(std::span<const std::uint32_t> coloring);

}  // namespace paley
