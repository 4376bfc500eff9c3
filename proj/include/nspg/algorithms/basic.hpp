#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nspg/error.hpp"
#include "nspg/graph.hpp"

namespace nspg {

// Exact solvers work on 64-bit adjacency masks.
inline constexpr std::size_t kMaxExactVertices = 64;

struct SolverBudget {
  std::size_t exact_vertices = kMaxExactVertices;  // clique, colouring, planarity, Hamiltonicity
  std::size_t perfect_vertices = 24;              // odd-hole search
  std::uint64_t search_nodes = 50'000'000;        // per backtracking call
};

namespace detail {

inline void require_budget(const char* what, std::size_t n, std::size_t budget) {
  const std::size_t limit = std::min(budget, kMaxExactVertices);
  if (n > limit)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) +
                         " vertices exceed the exact-solver budget of " + std::to_string(limit));
}

inline std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint64_t> masks(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) masks[v] = g.row(v).word0();
  return masks;
}

inline std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Component id per vertex; vertices with removed[v] set get npos.
inline std::vector<std::size_t> components(const SimpleGraph& g, const std::vector<char>& removed,
                                           std::size_t* count = nullptr) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), npos);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != npos || (!removed.empty() && removed[s])) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.has_edge(u, v) && comp[v] == npos && (removed.empty() || !removed[v])) {
          comp[v] = next;
          queue.push_back(v);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace detail

inline bool is_connected(const SimpleGraph& g) {
  std::size_t count = 0;
  detail::components(g, {}, &count);
  return count <= 1;
}

struct BasicInvariants {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::size_t> degree_sequence;  // per vertex, in vertex order
  bool is_connected = false;
  bool is_complete = false;
  bool is_regular = false;
  bool is_bipartite = false;
  bool is_tree = false;
  bool is_eulerian = false;
};

inline bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline BasicInvariants basic_invariants(const SimpleGraph& g) {
  BasicInvariants inv;
  const std::size_t n = g.vertex_count();
  inv.vertex_count = n;
  inv.edge_count = g.edge_count();
  for (std::size_t v = 0; v < n; ++v) inv.degree_sequence.push_back(g.degree(v));
  inv.is_connected = is_connected(g);
  inv.is_complete = inv.edge_count == n * (n - (n > 0 ? 1 : 0)) / 2;
  inv.is_regular = std::adjacent_find(inv.degree_sequence.begin(), inv.degree_sequence.end(),
                                      std::not_equal_to<>()) == inv.degree_sequence.end();
  inv.is_bipartite = is_bipartite(g);
  inv.is_tree = n > 0 && inv.is_connected && inv.edge_count + 1 == n;
  inv.is_eulerian = inv.is_connected && std::all_of(inv.degree_sequence.begin(),
                                                    inv.degree_sequence.end(),
                                                    [](std::size_t d) { return d % 2 == 0; });
  return inv;
}

// Closed trail through every edge (Hierholzer), as a vertex sequence whose
// first and last entries coincide. nullopt when the graph is not Eulerian.
// A graph without edges yields the single vertex 0.
inline std::optional<std::vector<std::size_t>> eulerian_circuit(const SimpleGraph& g) {
  if (!basic_invariants(g).is_eulerian) return std::nullopt;
  if (g.vertex_count() == 0) return std::vector<std::size_t>{};
  SimpleGraph remaining = g;
  std::vector<std::size_t> stack{0}, circuit;
  while (!stack.empty()) {
    const auto u = stack.back();
    std::size_t next = remaining.vertex_count();
    for (std::size_t v = 0; v < remaining.vertex_count(); ++v)
      if (remaining.has_edge(u, v)) {
        next = v;
        break;
      }
    if (next == remaining.vertex_count()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      remaining.remove_edge(u, next);
      stack.push_back(next);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

// Shortest cycle length by breadth-first search from every vertex;
// kInfiniteGirth for forests.
inline std::size_t girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::size_t best = kInfiniteGirth;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), npos);
    dist[root] = 0;
    parent[root] = npos;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (auto v : g.neighbors(u)) {
        if (dist[v] == npos) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace nspg
