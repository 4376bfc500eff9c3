#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/algorithms/clique.hpp"
#include "nspg/error.hpp"
#include "nspg/graph.hpp"

namespace nspg {

struct ColoringResult {
  std::size_t chromatic_number = 0;
  std::vector<std::size_t> colors;  // colour per vertex, 0-based
};

inline bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

namespace detail {

// Greedy DSATUR: repeatedly colour the vertex with the most distinct
// neighbouring colours (ties: highest degree, then lowest index).
inline std::vector<std::size_t> dsatur_greedy(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(n, none);
  std::vector<std::uint64_t> seen(n, 0);  // colours seen by neighbours, as bits
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = none;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != none) continue;
      if (pick == none || std::popcount(seen[v]) > std::popcount(seen[pick]) ||
          (std::popcount(seen[v]) == std::popcount(seen[pick]) &&
           std::popcount(adj[v]) > std::popcount(adj[pick])))
        pick = v;
    }
    const auto c = std::size_t(std::countr_one(seen[pick]));
    color[pick] = c;
    for (std::uint64_t m = adj[pick]; m; m &= m - 1) seen[std::size_t(std::countr_zero(m))] |= std::uint64_t{1} << c;
  }
  return color;
}

// Exact k-colourability by DSATUR-ordered backtracking. A vertex may only
// open colour (max used + 1), which removes colour-permutation symmetry.
class KColoring {
 public:
  KColoring(const std::vector<std::uint64_t>& adj, std::size_t k, std::uint64_t node_limit)
      : adj_(adj), k_(k), node_limit_(node_limit), color_(adj.size(), none) {}

  std::optional<std::vector<std::size_t>> solve() {
    if (search(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  static constexpr auto none = static_cast<std::size_t>(-1);

  std::uint64_t neighbour_colors(std::size_t v) const {
    std::uint64_t used = 0;
    for (std::uint64_t m = adj_[v]; m; m &= m - 1) {
      const auto c = color_[std::size_t(std::countr_zero(m))];
      if (c != none) used |= std::uint64_t{1} << c;
    }
    return used;
  }

  bool search(std::size_t colored, std::size_t used_colors) {
    if (++nodes_ > node_limit_) throw BudgetExceeded("chromatic_number: search node limit reached");
    if (colored == adj_.size()) return true;
    std::size_t pick = none;
    int best_sat = -1, best_deg = -1;
    std::uint64_t pick_used = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (color_[v] != none) continue;
      const auto used = neighbour_colors(v);
      const int sat = std::popcount(used);
      const int deg = std::popcount(adj_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_used = used;
      }
    }
    const std::size_t limit = std::min(k_, used_colors + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (pick_used >> c & 1u) continue;
      color_[pick] = c;
      if (search(colored + 1, std::max(used_colors, c + 1))) return true;
    }
    color_[pick] = none;
    return false;
  }

  const std::vector<std::uint64_t>& adj_;
  std::size_t k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> color_;
};

}  // namespace detail

// Exact chromatic number: try k = omega, omega + 1, ... below the greedy
// DSATUR bound; the first feasible k wins, otherwise the greedy colouring is
// optimal.
inline ColoringResult chromatic_number(const SimpleGraph& g, const SolverBudget& budget = {}) {
  detail::require_budget("chromatic_number", g.vertex_count(), budget.exact_vertices);
  ColoringResult r;
  if (g.vertex_count() == 0) return r;
  const auto adj = detail::adjacency_masks(g);
  auto greedy = detail::dsatur_greedy(adj);
  const std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  const std::size_t lower = clique_number(g, budget).size;
  for (std::size_t k = lower; k < upper; ++k) {
    if (auto coloring = detail::KColoring(adj, k, budget.search_nodes).solve()) {
      r.chromatic_number = k;
      r.colors = std::move(*coloring);
      return r;
    }
  }
  r.chromatic_number = upper;
  r.colors = std::move(greedy);
  return r;
}

}  // namespace nspg
