#pragma once

// Exhaustive reference implementations used to freeze expected values.
// Deliberately naive; only run on small inputs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nspg/graph.hpp"
#include "nspg/group.hpp"
#include "nspg/subgroup.hpp"

namespace oracle {

using nspg::Element;
using nspg::FiniteGroup;
using nspg::SimpleGraph;

inline std::vector<std::uint32_t> masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> m(g.vertex_count(), 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) m[u] |= std::uint32_t{1} << v;
  return m;
}

inline bool is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((set >> v) & 1u)
      if ((set & ~adj[v] & ~(std::uint32_t{1} << v)) != 0) return false;
  return true;
}

// Largest clique over all vertex subsets.
inline std::size_t clique_number(const SimpleGraph& g) {
  const auto adj = masks(g);
  const std::uint32_t n = std::uint32_t(adj.size());
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
    if (is_clique(adj, s)) best = std::max<std::size_t>(best, std::size_t(__builtin_popcount(s)));
  return best;
}

// Fewest colours: dp[S] = min over independent I within S containing the lowest
// vertex of S, of dp[S \ I] + 1.
inline std::size_t chromatic_number(const SimpleGraph& g) {
  const auto adj = masks(g);
  const std::size_t n = adj.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> independent(full + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if (((s >> v) & 1u) && (adj[v] & s)) ok = false;
    independent[s] = ok;
  }
  std::vector<std::size_t> dp(full + 1, n + 1);
  dp[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t sub = s; sub; sub = (sub - 1) & s)
      if ((sub & low) && independent[sub]) dp[s] = std::min(dp[s], dp[s & ~sub] + 1);
  }
  return dp[full];
}

inline bool connected_without(const std::vector<std::uint32_t>& adj, std::uint32_t removed) {
  const std::size_t n = adj.size();
  const std::uint32_t alive = ((std::uint32_t{1} << n) - 1) & ~removed;
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t v = 0; v < n; ++v)
      if (((seen >> v) & 1u) && (adj[v] & alive & ~seen)) {
        seen |= adj[v] & alive;
        grew = true;
      }
  }
  return seen == alive;
}

// Smallest vertex set whose removal leaves a disconnected graph on >= 2
// vertices; n - 1 when no such set exists (complete graphs).
inline std::size_t vertex_connectivity(const SimpleGraph& g) {
  const auto adj = masks(g);
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::size_t best = n - 1;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const std::size_t k = std::size_t(__builtin_popcount(s));
    if (k >= best || n - k < 2) continue;
    if (!connected_without(adj, s)) best = k;
  }
  return best;
}

// Held-Karp reachability over (visited set, endpoint) from vertex 0.
inline bool is_hamiltonian(const SimpleGraph& g) {
  const auto adj = masks(g);
  const std::size_t n = adj.size();
  if (n < 3) return false;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(full + 1, 0);  // bit v: a path 0 .. v covering S exists
  ends[1] = 1;
  for (std::uint32_t s = 1; s <= full; s += 2)
    for (std::size_t v = 0; v < n; ++v)
      if ((ends[s] >> v) & 1u)
        for (std::size_t w = 0; w < n; ++w)
          if (!((s >> w) & 1u) && ((adj[v] >> w) & 1u)) ends[s | (1u << w)] |= 1u << w;
  for (std::size_t v = 1; v < n; ++v)
    if (((ends[full] >> v) & 1u) && (adj[v] & 1u)) return true;
  return false;
}

// Induced odd cycle of length >= 5: every subset checked for being a
// connected 2-regular induced subgraph.
inline bool has_odd_hole(const SimpleGraph& g) {
  const auto adj = masks(g);
  const std::size_t n = adj.size();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k < 5 || k % 2 == 0) continue;
    bool two_regular = true;
    for (std::size_t v = 0; v < n && two_regular; ++v)
      if (((s >> v) & 1u) && __builtin_popcount(adj[v] & s) != 2) two_regular = false;
    if (two_regular && connected_without(adj, ~s & ((std::uint32_t{1} << n) - 1))) return true;
  }
  return false;
}

// Shortest cycle: for each edge uv, the shortest u-v path avoiding that
// edge, plus one. SIZE_MAX when acyclic.
inline std::size_t girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = SIZE_MAX;
  for (auto [s, t] : g.edges()) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.has_edge(u, v) || dist[v] != SIZE_MAX) continue;
        if ((u == s && v == t) || (u == t && v == s)) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    if (dist[t] != SIZE_MAX) best = std::min(best, dist[t] + 1);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Group-side oracles
// ---------------------------------------------------------------------------

inline std::size_t order_by_iteration(const FiniteGroup& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != nspg::kIdentity; x = g.multiply(x, a)) ++k;
  return k;
}

inline std::set<Element> left_coset(const FiniteGroup& g, const nspg::SubgroupSet& h, Element a) {
  std::set<Element> c;
  for (Element x : h.elements()) c.insert(g.multiply(a, x));
  return c;
}

// Normal-subgroup power graph straight from the definition: x ~ y iff the
// coset of x equals the coset of some positive power of y, or vice versa.
// Cosets compared as explicit element sets; exponents run to |G|.
inline SimpleGraph nsb_by_definition(const FiniteGroup& g, const nspg::SubgroupSet& h) {
  std::vector<Element> verts{nspg::kIdentity};
  for (Element a = 1; a < g.order(); ++a)
    if (!h.contains(a)) verts.push_back(a);
  auto out = SimpleGraph::with_vertices(verts.size());
  const auto power_hits = [&](Element x, Element y) {
    const auto target = left_coset(g, h, x);
    Element p = y;
    for (std::size_t m = 1; m <= g.order(); ++m, p = g.multiply(p, y))
      if (left_coset(g, h, p) == target) return true;
    return false;
  };
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (power_hits(verts[i], verts[j]) || power_hits(verts[j], verts[i])) out.add_edge(i, j);
  return out;
}

inline std::uint64_t phi_by_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

// Seeded G(n, p) graph with p = percent / 100. Raw engine output only, so
// the sequence is identical across standard libraries.
inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  auto g = SimpleGraph::with_vertices(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
