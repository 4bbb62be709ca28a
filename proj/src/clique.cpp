#include <algorithm>
#include <bit>

#include "paley/invariants.hpp"

namespace paley {
namespace {

using Word = Bitset::Word;

// Vertices ordered so that the last one has minimum degree in the whole
// graph, the one before minimum degree once the last is removed, and so on.
std::vector<Vertex> degeneracy_order(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  std::vector<std::uint32_t> deg(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.adjacent(vertices[i], vertices[j])) ++deg[i];
    }
  }
  std::vector<bool> removed(k, false);
  std::vector<Vertex> order(k);
  for (std::size_t pos = k; pos-- > 0;) {
    std::size_t best = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!removed[i] && (best == k || deg[i] < deg[best])) best = i;
    }
    removed[best] = true;
    order[pos] = vertices[best];
    for (std::size_t i = 0; i < k; ++i) {
      if (!removed[i] && g.adjacent(vertices[i], vertices[best])) --deg[i];
    }
  }
  return order;
}

// Branch and bound over a renumbered candidate subgraph.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::span<const Vertex> candidates)
      : order_(degeneracy_order(g, candidates)),
        k_(order_.size()),
        words_((k_ + Bitset::kWordBits - 1) / Bitset::kWordBits),
        adj_(k_ * words_, 0) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (i != j && g.adjacent(order_[i], order_[j])) {
          adj_[i * words_ + j / Bitset::kWordBits] |= Word{1} << (j % Bitset::kWordBits);
        }
      }
    }
  }

  // Finds a clique larger than `floor` if one exists, stopping once `target`
  // is reached. Returns false if the node budget ran out.
  bool run(std::uint32_t floor, std::uint32_t target, std::uint64_t budget) {
    best_size_ = floor;
    target_ = target;
    budget_ = budget;
    best_.clear();
    if (k_ == 0 || floor >= target) return true;
    pool_.assign((k_ + 1) * words_, 0);
    order_buf_.assign((k_ + 1) * k_, 0);
    color_buf_.assign((k_ + 1) * k_, 0);
    Word* root = &pool_[0];
    for (std::size_t i = 0; i < k_; ++i) root[i / Bitset::kWordBits] |= Word{1} << (i % Bitset::kWordBits);
    current_.clear();
    aborted_ = false;
    done_ = false;
    expand(0);
    return !aborted_;
  }

  // Colour bound of the whole candidate set.
  std::uint32_t root_bound() {
    std::vector<Word> p(words_, 0);
    for (std::size_t i = 0; i < k_; ++i) p[i / Bitset::kWordBits] |= Word{1} << (i % Bitset::kWordBits);
    std::vector<std::uint32_t> ord(k_), col(k_);
    return color_sort(p.data(), ord.data(), col.data());
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint32_t best_size() const noexcept { return best_size_; }
  // Witness in original vertex ids.
  std::vector<Vertex> best() const {
    std::vector<Vertex> out;
    for (std::uint32_t i : best_) out.push_back(order_[i]);
    return out;
  }

 private:
  // Greedy sequential colouring of P in index order; writes vertices by
  // non-decreasing colour and returns the number of vertices coloured.
  std::uint32_t color_sort(const Word* p, std::uint32_t* ord, std::uint32_t* col) {
    std::vector<Word>& uncolored = scratch_a_;
    std::vector<Word>& avail = scratch_b_;
    uncolored.assign(p, p + words_);
    avail.resize(words_);
    std::uint32_t count = 0;
    std::uint32_t color = 0;
    bool left = true;
    while (left) {
      ++color;
      std::copy(uncolored.begin(), uncolored.end(), avail.begin());
      for (std::size_t w = 0; w < words_; ++w) {
        while (avail[w] != 0) {
          const std::size_t v = w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(avail[w]));
          avail[w] &= avail[w] - 1;
          const Word* nv = &adj_[v * words_];
          for (std::size_t x = w; x < words_; ++x) avail[x] &= ~nv[x];
          uncolored[w] &= ~(Word{1} << (v % Bitset::kWordBits));
          ord[count] = static_cast<std::uint32_t>(v);
          col[count] = color;
          ++count;
        }
      }
      left = std::any_of(uncolored.begin(), uncolored.end(), [](Word x) { return x != 0; });
    }
    return count == 0 ? 0 : col[count - 1];
  }

  void expand(std::size_t depth) {
    if (done_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Word* p = &pool_[depth * words_];
    std::uint32_t* ord = &order_buf_[depth * k_];
    std::uint32_t* col = &color_buf_[depth * k_];
    std::size_t count = 0;
    color_sort(p, ord, col);
    for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(p[w]));
    Word* next = &pool_[(depth + 1) * words_];
    for (std::size_t i = count; i-- > 0;) {
      if (current_.size() + col[i] <= best_size_) return;
      const std::uint32_t v = ord[i];
      current_.push_back(v);
      const Word* nv = &adj_[v * words_];
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & nv[w];
        nonempty |= next[w] != 0;
      }
      if (!nonempty) {
        if (current_.size() > best_size_) {
          best_size_ = static_cast<std::uint32_t>(current_.size());
          best_ = current_;
          if (best_size_ >= target_) done_ = true;
        }
      } else {
        expand(depth + 1);
      }
      current_.pop_back();
      if (done_ || aborted_) return;
      p[v / Bitset::kWordBits] &= ~(Word{1} << (v % Bitset::kWordBits));
    }
  }

  std::vector<Vertex> order_;
  std::size_t k_;
  std::size_t words_;
  std::vector<Word> adj_;
  std::vector<Word> pool_;
  std::vector<std::uint32_t> order_buf_;
  std::vector<std::uint32_t> color_buf_;
  std::vector<Word> scratch_a_;
  std::vector<Word> scratch_b_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint32_t best_size_ = 0;
  std::uint32_t target_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

struct AnchorSearchOutcome {
  std::vector<Vertex> witness;
  std::uint32_t upper = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
};

// Searches cliques containing each anchor set in turn.
AnchorSearchOutcome search(const Graph& g, const std::vector<std::vector<Vertex>>& anchors,
                           std::uint32_t floor, std::uint32_t target, std::uint64_t budget) {
  AnchorSearchOutcome out;
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<Vertex>> roots = anchors;
  if (roots.empty()) roots.push_back({});
  std::uint32_t best = floor;
  for (const auto& anchor : roots) {
    if (!is_clique(g, anchor)) continue;
    Bitset cand(n);
    cand.set_all();
    for (Vertex a : anchor) {
      cand &= g.neighbors(a);
    }
    for (Vertex a : anchor) cand.reset(a);
    const auto candidates = cand.to_vector();
    const auto base = static_cast<std::uint32_t>(anchor.size());
    CliqueSearch s(g, candidates);
    const std::uint32_t bound = base + s.root_bound();
    out.upper = std::max(out.upper, bound);
    if (!out.complete || bound <= best) continue;
    if (base > best && candidates.empty()) {
      best = base;
      out.witness = anchor;
      if (best >= target) break;
      continue;
    }
    const std::uint32_t inner_floor = best > base ? best - base : 0;
    const std::uint32_t inner_target = target > base ? target - base : 1;
    const std::uint64_t remaining = budget > out.nodes ? budget - out.nodes : 0;
    const bool finished = s.run(inner_floor, inner_target, remaining);
    out.nodes += s.nodes();
    if (s.best_size() > inner_floor && !s.best().empty()) {
      best = base + s.best_size();
      out.witness = anchor;
      for (Vertex v : s.best()) out.witness.push_back(v);
    }
    if (!finished) out.complete = false;
    if (out.complete && best >= target) break;
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

}  // namespace

CliqueResult clique_number(const Graph& g, std::uint32_t lower_hint, std::uint32_t upper_hint,
                           const CliqueOptions& options) {
  CliqueResult result;
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n == 0) {
    result.bounds = {0, 0};
    return result;
  }
  const std::uint32_t cap = std::min(upper_hint, n);
  // Trivial witnesses so anchored searches always have a baseline.
  std::vector<Vertex> trivial{0};
  for (Vertex u = 0; u < n && trivial.size() < 2; ++u) {
    const std::size_t v = g.neighbors(u).first();
    if (v < n) trivial = {u, static_cast<Vertex>(v)};
  }

  auto attempt = [&](std::uint32_t floor) {
    return search(g, options.anchors, floor, cap, options.node_budget);
  };
  const std::uint32_t floor = lower_hint > 0 ? std::min(lower_hint, cap) - 1 : 0;
  AnchorSearchOutcome out = attempt(floor);
  if (out.complete && out.witness.size() <= floor && floor > 0) {
    // The lower hint overstated omega.
    const std::uint64_t used = out.nodes;
    out = attempt(0);
    out.nodes += used;
  }
  result.nodes = out.nodes;
  result.witness = out.witness.size() >= trivial.size() ? out.witness : trivial;
  const auto found = static_cast<std::uint32_t>(result.witness.size());
  if (out.complete) {
    result.status = SearchStatus::Exact;
    result.bounds = {found, found};
  } else {
    result.status = SearchStatus::Timeout;
    result.bounds = {found, std::max(found, std::min(cap, out.upper))};
  }
  return result;
}

CliqueResult independence_number(const Graph& g, std::uint32_t upper_hint, const CliqueOptions& options) {
  return clique_number(complement(g), 0, upper_hint, options);
}

}  // namespace paley
