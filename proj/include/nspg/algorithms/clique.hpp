#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/graph.hpp"

namespace nspg {

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending vertex indices
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting, branch-and-bound on |R| + |P|.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const SimpleGraph& g) : adj_(adjacency_masks(g)) {}

  CliqueResult run() {
    expand(0, 0, low_bits(adj_.size()), 0);
    CliqueResult r;
    r.size = std::size_t(std::popcount(best_));
    for (std::uint64_t m = best_; m; m &= m - 1) r.witness.push_back(std::size_t(std::countr_zero(m)));
    return r;
  }

 private:
  void expand(std::uint64_t clique, int clique_size, std::uint64_t candidates, std::uint64_t excluded) {
    if (!candidates && !excluded) {
      if (clique_size > std::popcount(best_)) best_ = clique;
      return;
    }
    if (clique_size + std::popcount(candidates) <= std::popcount(best_)) return;

    // Pivot maximising |candidates ∩ N(pivot)|.
    std::uint64_t pivot_nbrs = 0;
    int pivot_score = -1;
    for (std::uint64_t m = candidates | excluded; m; m &= m - 1) {
      const auto u = std::size_t(std::countr_zero(m));
      const int score = std::popcount(candidates & adj_[u]);
      if (score > pivot_score) {
        pivot_score = score;
        pivot_nbrs = adj_[u];
      }
    }
    for (std::uint64_t m = candidates & ~pivot_nbrs; m; m &= m - 1) {
      const auto v = std::size_t(std::countr_zero(m));
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(clique | bit, clique_size + 1, candidates & adj_[v], excluded & adj_[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
};

}  // namespace detail

// Exact clique number with one maximum clique as witness.
inline CliqueResult clique_number(const SimpleGraph& g, const SolverBudget& budget = {}) {
  detail::require_budget("clique_number", g.vertex_count(), budget.exact_vertices);
  return detail::MaxCliqueSearch(g).run();
}

}  // namespace nspg
