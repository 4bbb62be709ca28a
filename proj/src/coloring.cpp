#include <algorithm>
#include <random>

#include "paley/invariants.hpp"

namespace paley {
namespace {

constexpr std::uint32_t kUncolored = UINT32_MAX;

// Saturation bookkeeping shared by the greedy and exact DSATUR variants.
class Saturation {
 public:
  Saturation(const Graph& g, std::uint32_t max_colors)
      : g_(g),
        n_(g.n_vertices()),
        k_(max_colors),
        color_(n_, kUncolored),
        counts_(n_ * k_, 0),
        sat_(n_, 0),
        degree_(n_) {
    for (Vertex v = 0; v < n_; ++v) degree_[v] = static_cast<std::uint32_t>(g.degree(v));
  }

  std::uint32_t color(Vertex v) const noexcept { return color_[v]; }
  std::uint32_t saturation(Vertex v) const noexcept { return sat_[v]; }
  bool allowed(Vertex v, std::uint32_t c) const noexcept { return counts_[v * k_ + c] == 0; }

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    const Bitset& nb = g_.neighbors(v);
    for (std::size_t u = nb.first(); u < n_; u = nb.next(u + 1)) {
      if (counts_[u * k_ + c]++ == 0) ++sat_[u];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kUncolored;
    const Bitset& nb = g_.neighbors(v);
    for (std::size_t u = nb.first(); u < n_; u = nb.next(u + 1)) {
      if (--counts_[u * k_ + c] == 0) --sat_[u];
    }
  }

  // Max saturation, then max degree, then smallest index; n if all coloured.
  Vertex select() const noexcept {
    Vertex best = static_cast<Vertex>(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == n_ || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best])) {
        best = v;
      }
    }
    return best;
  }

  const std::vector<std::uint32_t>& colors() const noexcept { return color_; }

 private:
  const Graph& g_;
  std::size_t n_;
  std::uint32_t k_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> degree_;
};

class KColoring {
 public:
  KColoring(const Graph& g, std::uint32_t k, std::uint64_t budget) : state_(g, k), k_(k), budget_(budget) {}

  Colorability run(std::span<const Vertex> precolor) {
    used_ = 0;
    for (Vertex v : precolor) {
      if (used_ >= k_) return Colorability::No;
      state_.assign(v, used_++);
    }
    const bool ok = expand();
    if (aborted_) return Colorability::Timeout;
    return ok ? Colorability::Yes : Colorability::No;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::uint32_t>& colors() const noexcept { return state_.colors(); }

 private:
  bool expand() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const Vertex v = state_.select();
    if (v == state_.colors().size()) return true;
    if (state_.saturation(v) >= k_) return false;
    const std::uint32_t limit = std::min(used_ + 1, k_);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (!state_.allowed(v, c)) continue;
      const bool fresh = c == used_;
      if (fresh) ++used_;
      state_.assign(v, c);
      if (expand()) return true;
      state_.unassign(v);
      if (fresh) --used_;
      if (aborted_) return false;
    }
    return false;
  }

  Saturation state_;
  std::uint32_t k_;
  std::uint32_t used_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::uint32_t ColoringResult::colors() const noexcept {
  std::uint32_t top = 0;
  for (std::uint32_t c : coloring) top = std::max(top, c + 1);
  return top;
}

std::vector<std::uint32_t> normalize_coloring(std::span<const std::uint32_t> coloring) {
  std::vector<std::uint32_t> relabel;
  std::vector<std::uint32_t> out(coloring.size());
  const std::uint32_t none = UINT32_MAX;
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    const std::uint32_t c = coloring[v];
    if (c >= relabel.size()) relabel.resize(c + 1, none);
    if (relabel[c] == none) relabel[c] = next++;
    out[v] = relabel[c];
  }
  return out;
}

std::vector<std::uint32_t> greedy_coloring(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n == 0) return {};
  Saturation state(g, n);
  for (std::uint32_t step = 0; step < n; ++step) {
    const Vertex v = state.select();
    std::uint32_t c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  return normalize_coloring(state.colors());
}

ColorabilityResult k_colorable(const Graph& g, std::uint32_t k, std::span<const Vertex> precolor,
                               std::uint64_t node_budget) {
  ColorabilityResult out;
  if (g.n_vertices() == 0) {
    out.answer = Colorability::Yes;
    return out;
  }
  if (k == 0) {
    out.answer = Colorability::No;
    return out;
  }
  KColoring search(g, k, node_budget);
  out.answer = search.run(precolor);
  out.nodes = search.nodes();
  if (out.answer == Colorability::Yes) out.coloring = normalize_coloring(search.colors());
  return out;
}

std::optional<std::vector<std::uint32_t>> tabu_coloring(const Graph& g, std::uint32_t k, std::uint64_t max_iterations,
                                                        std::uint32_t seed) {
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n == 0) return std::vector<std::uint32_t>{};
  if (k == 0) return std::nullopt;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v).to_vector();

  // Start from DSATUR order, clamping colours >= k to the least conflicting one.
  std::vector<std::uint32_t> color(n, kUncolored);
  std::vector<std::uint32_t> conflicts(std::size_t{n} * k, 0);
  auto at = [&](Vertex v, std::uint32_t c) -> std::uint32_t& { return conflicts[std::size_t{v} * k + c]; };
  const std::vector<std::uint32_t> start = greedy_coloring(g);
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t c = start[v];
    if (c >= k) {
      c = 0;
      for (std::uint32_t d = 1; d < k; ++d)
        if (at(v, d) < at(v, c)) c = d;
    }
    color[v] = c;
    for (Vertex u : adj[v]) ++at(u, c);
  }
  std::uint64_t total = 0;
  for (Vertex v = 0; v < n; ++v) total += at(v, color[v]);
  total /= 2;

  std::mt19937 rng(seed);
  std::vector<std::uint64_t> tabu(std::size_t{n} * k, 0);
  std::uint64_t best_total = total;
  for (std::uint64_t it = 1; it <= max_iterations && total > 0; ++it) {
    long best_delta = 0;
    Vertex best_v = n;
    std::uint32_t best_c = 0;
    std::uint32_t ties = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t own = at(v, color[v]);
      if (own == 0) continue;
      for (std::uint32_t c = 0; c < k; ++c) {
        if (c == color[v]) continue;
        const long delta = long(at(v, c)) - long(own);
        const bool allowed = tabu[std::size_t{v} * k + c] < it || long(total) + delta < long(best_total);
        if (!allowed) continue;
        if (best_v == n || delta < best_delta) {
          best_delta = delta;
          best_v = v;
          best_c = c;
          ties = 1;
        } else if (delta == best_delta && rng() % ++ties == 0) {
          best_v = v;
          best_c = c;
        }
      }
    }
    if (best_v == n) continue;
    const std::uint32_t old = color[best_v];
    for (Vertex u : adj[best_v]) {
      --at(u, old);
      ++at(u, best_c);
    }
    color[best_v] = best_c;
    total = std::uint64_t(long(total) + best_delta);
    best_total = std::min(best_total, total);
    tabu[std::size_t{best_v} * k + old] = it + 10 * total / 16 + rng() % 10;
  }
  if (total > 0) return std::nullopt;
  return normalize_coloring(color);
}

ColoringResult chromatic_number(const Graph& g, std::uint32_t lower, std::uint32_t upper,
                                const ColoringOptions& options) {
  ColoringResult result;
  const auto n = static_cast<std::uint32_t>(g.n_vertices());
  if (n == 0) return result;

  result.coloring = greedy_coloring(g);
  if (options.initial_coloring && is_proper_coloring(g, *options.initial_coloring) &&
      color_count(*options.initial_coloring) < result.colors()) {
    result.coloring = normalize_coloring(*options.initial_coloring);
  }
  // A supplied upper bound carries no witness; the search below reaches it anyway.
  (void)upper;

  std::vector<Vertex> clique;
  std::uint64_t used = 0;
  if (options.clique && is_clique(g, *options.clique)) {
    clique = *options.clique;
  } else {
    const CliqueResult cr = clique_number(g, 0, UINT32_MAX, {options.node_budget, {}});
    used += cr.nodes;
    clique = cr.witness;
  }
  std::uint32_t lo = std::max<std::uint32_t>({lower, static_cast<std::uint32_t>(clique.size()), 1});

  // Local search closes the gap from above; the exact search then only has to
  // refute colour counts below the best one found.
  const std::uint64_t tabu_iterations = std::min<std::uint64_t>(options.node_budget / 4, 20000 + 100 * std::uint64_t{n});
  while (result.colors() > lo) {
    const std::uint32_t k = result.colors() - 1;
    auto attempt = tabu_coloring(g, k, tabu_iterations, 0x9e3779b9u ^ k);
    used += tabu_iterations;
    if (!attempt) break;
    result.coloring = std::move(*attempt);
  }

  bool timed_out = false;
  for (std::uint32_t k = lo; k < result.colors(); ++k) {
    const std::uint64_t remaining = options.node_budget > used ? options.node_budget - used : 0;
    const ColorabilityResult attempt = k_colorable(g, k, clique, remaining);
    used += attempt.nodes;
    if (attempt.answer == Colorability::Yes) {
      result.coloring = attempt.coloring;
      break;
    }
    if (attempt.answer == Colorability::Timeout) {
      timed_out = true;
      break;
    }
    lo = k + 1;
  }
  result.nodes = used;
  const std::uint32_t hi = result.colors();
  lo = std::min(lo, hi);
  result.bounds = {lo, hi};
  result.status = (timed_out || lo != hi) ? SearchStatus::Timeout : SearchStatus::Exact;
  return result;
}

}  // namespace paley
