#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/algorithms/planarity.hpp"
#include "nspg/error.hpp"
#include "nspg/graph.hpp"

namespace nspg {

namespace detail {

class HamiltonSearch {
 public:
  HamiltonSearch(std::vector<std::uint64_t> adj, std::uint64_t node_limit)
      : adj_(std::move(adj)), all_(low_bits(adj_.size())), node_limit_(node_limit) {}

  std::optional<std::vector<std::size_t>> run() {
    path_ = {0};
    if (search(1)) return path_;
    return std::nullopt;
  }

 private:
  // Every unvisited vertex needs two usable neighbours, and the unvisited
  // vertices plus the path end must stay connected.
  bool feasible(std::uint64_t visited, std::size_t tail) const {
    const std::uint64_t open = all_ & ~visited;
    const std::uint64_t ends = (std::uint64_t{1} << tail) | 1u;
    for (std::uint64_t m = open; m; m &= m - 1) {
      const auto u = std::size_t(std::countr_zero(m));
      if (std::popcount(adj_[u] & (open | ends)) < 2) return false;
    }
    const std::uint64_t region = open | (std::uint64_t{1} << tail);
    std::uint64_t reached = std::uint64_t{1} << tail, frontier = reached;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj_[std::size_t(std::countr_zero(m))];
      frontier = next & region & ~reached;
      reached |= frontier;
    }
    return reached == region;
  }

  bool search(std::size_t depth) {
    if (++nodes_ > node_limit_) throw BudgetExceeded("hamiltonian_cycle: search node limit reached");
    const std::size_t tail = path_.back();
    if (depth == adj_.size()) return (adj_[tail] & 1u) != 0;
    if (!feasible(visited_, tail)) return false;
    // Fewest onward options first.
    std::vector<std::pair<int, std::size_t>> order;
    for (std::uint64_t m = adj_[tail] & ~visited_; m; m &= m - 1) {
      const auto v = std::size_t(std::countr_zero(m));
      order.emplace_back(std::popcount(adj_[v] & ~visited_), v);
    }
    std::sort(order.begin(), order.end());
    for (auto [score, v] : order) {
      visited_ |= std::uint64_t{1} << v;
      path_.push_back(v);
      if (search(depth + 1)) return true;
      path_.pop_back();
      visited_ &= ~(std::uint64_t{1} << v);
    }
    return false;
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t all_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::uint64_t visited_ = 1;
  std::vector<std::size_t> path_;
};

}  // namespace detail

// Hamiltonian cycle as a vertex sequence starting at vertex 0 (closing edge
// implied), or nullopt when none exists. Graphs with fewer than 3 vertices
// have none. Throws BudgetExceeded rather than guessing.
inline std::optional<std::vector<std::size_t>> hamiltonian_cycle(const SimpleGraph& g,
                                                                 const SolverBudget& budget = {}) {
  const std::size_t n = g.vertex_count();
  detail::require_budget("hamiltonian_cycle", n, budget.exact_vertices);
  if (n < 3) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  const auto adj = detail::adjacency_masks(g);
  if (detail::BlockFinder(adj).run().size() != 1) return std::nullopt;  // cut vertex
  return detail::HamiltonSearch(adj, budget.search_nodes).run();
}

inline bool is_hamiltonian_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (auto v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

}  // namespace nspg
