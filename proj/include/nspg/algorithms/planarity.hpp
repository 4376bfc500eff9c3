#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/graph.hpp"

namespace nspg {

// Subdivision of K5 or K3,3 contained in a non-planar graph.
struct KuratowskiWitness {
  std::string kind;                     // "K5" or "K3,3"
  std::vector<std::size_t> branch_vertices;
  std::vector<Edge> edges;              // edges of the subdivision
};

struct PlanarityResult {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;
};

namespace detail {

// Biconnected components as edge lists (Tarjan, edge stack).
class BlockFinder {
 public:
  explicit BlockFinder(const std::vector<std::uint64_t>& adj)
      : adj_(adj), disc_(adj.size(), 0), low_(adj.size(), 0) {}

  std::vector<std::vector<Edge>> run() {
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (!disc_[v]) visit(v, adj_.size());
    return std::move(blocks_);
  }

 private:
  void visit(std::size_t u, std::size_t parent) {
    disc_[u] = low_[u] = ++time_;
    for (std::uint64_t m = adj_[u]; m; m &= m - 1) {
      const auto v = std::size_t(std::countr_zero(m));
      if (!disc_[v]) {
        stack_.emplace_back(u, v);
        visit(v, u);
        low_[u] = std::min(low_[u], low_[v]);
        if (low_[v] >= disc_[u]) {
          std::vector<Edge> block;
          Edge e;
          do {
            e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
          } while (e != Edge{u, v});
          blocks_.push_back(std::move(block));
        }
      } else if (v != parent && disc_[v] < disc_[u]) {
        stack_.emplace_back(u, v);
        low_[u] = std::min(low_[u], disc_[v]);
      }
    }
  }

  const std::vector<std::uint64_t>& adj_;
  std::vector<std::size_t> disc_, low_;
  std::size_t time_ = 0;
  std::vector<Edge> stack_;
  std::vector<std::vector<Edge>> blocks_;
};

inline std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

// Demoucron-Malgrange-Pertuiset path embedding on one biconnected block.
// Faces are kept as cyclic vertex sequences; every fragment (chord or
// component of unembedded vertices with its attachment edges) must fit in a
// face containing all of its attachment vertices.
inline bool block_is_planar(const std::vector<Edge>& block_edges, std::size_t n) {
  std::vector<std::uint64_t> adj(n, 0);
  std::uint64_t vertices = 0;
  for (auto [u, v] : block_edges) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    vertices |= bit(u) | bit(v);
  }
  const std::size_t vcount = std::size_t(std::popcount(vertices));
  const std::size_t ecount = block_edges.size();
  if (vcount <= 4 || ecount <= vcount) return true;
  if (ecount > 3 * vcount - 6) return false;

  // Initial cycle by DFS.
  std::vector<std::size_t> cycle;
  {
    const auto root = std::size_t(std::countr_zero(vertices));
    std::vector<std::size_t> parent(n, n), stack{root};
    std::vector<char> state(n, 0);  // 0 new, 1 on path, 2 done
    std::vector<std::uint64_t> todo(adj);
    state[root] = 1;
    while (!stack.empty() && cycle.empty()) {
      const auto u = stack.back();
      if (!todo[u]) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const auto v = std::size_t(std::countr_zero(todo[u]));
      todo[u] &= todo[u] - 1;
      if (v == parent[u]) continue;
      if (state[v] == 1) {
        for (std::size_t x = u; x != v; x = parent[x]) cycle.push_back(x);
        cycle.push_back(v);
      } else if (state[v] == 0) {
        state[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }

  std::vector<std::uint64_t> embedded(n, 0);
  std::uint64_t placed = 0;
  std::size_t placed_edges = 0;
  const auto embed_edge = [&](std::size_t u, std::size_t v) {
    embedded[u] |= bit(v);
    embedded[v] |= bit(u);
    ++placed_edges;
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    placed |= bit(cycle[i]);
    embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  std::vector<std::vector<std::size_t>> faces{cycle, std::vector<std::size_t>(cycle.rbegin(), cycle.rend())};

  struct Fragment {
    std::uint64_t attachments = 0;
    std::uint64_t interior = 0;  // unembedded vertices; 0 for a chord
    std::size_t a = 0, b = 0;    // chord endpoints
  };

  while (placed_edges < ecount) {
    std::vector<Fragment> fragments;
    for (std::uint64_t m = placed; m; m &= m - 1) {
      const auto u = std::size_t(std::countr_zero(m));
      for (std::uint64_t c = adj[u] & placed & ~embedded[u]; c; c &= c - 1) {
        const auto v = std::size_t(std::countr_zero(c));
        if (v > u) fragments.push_back({bit(u) | bit(v), 0, u, v});
      }
    }
    std::uint64_t unvisited = vertices & ~placed;
    while (unvisited) {
      Fragment f;
      std::uint64_t frontier = unvisited & (~unvisited + 1);
      while (frontier) {
        f.interior |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj[std::size_t(std::countr_zero(m))];
        f.attachments |= next & placed;
        frontier = next & vertices & ~placed & ~f.interior;
      }
      unvisited &= ~f.interior;
      fragments.push_back(f);
    }

    std::vector<std::uint64_t> face_masks;
    for (const auto& face : faces) {
      std::uint64_t m = 0;
      for (auto v : face) m |= bit(v);
      face_masks.push_back(m);
    }
    std::size_t chosen = fragments.size(), chosen_face = 0;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      std::size_t count = 0, first = 0;
      for (std::size_t f = 0; f < faces.size(); ++f)
        if ((fragments[i].attachments & ~face_masks[f]) == 0) {
          if (count++ == 0) first = f;
        }
      if (count == 0) return false;
      if (count == 1 || chosen == fragments.size()) {
        const bool forced = count == 1;
        chosen = i;
        chosen_face = first;
        if (forced) break;
      }
    }

    // Path through the chosen fragment between two attachment vertices.
    const Fragment& frag = fragments[chosen];
    std::vector<std::size_t> path;
    if (!frag.interior) {
      path = {frag.a, frag.b};
    } else {
      std::size_t start = n, entry = n;
      for (std::uint64_t m = frag.attachments; m && start == n; m &= m - 1) {
        const auto a = std::size_t(std::countr_zero(m));
        if (adj[a] & frag.interior) {
          start = a;
          entry = std::size_t(std::countr_zero(adj[a] & frag.interior));
        }
      }
      std::vector<std::size_t> prev(n, n);
      std::deque<std::size_t> queue{entry};
      prev[entry] = entry;
      std::size_t end = n, last = n;
      while (!queue.empty() && end == n) {
        const auto x = queue.front();
        queue.pop_front();
        const std::uint64_t targets = adj[x] & frag.attachments & ~bit(start);
        if (targets) {
          end = std::size_t(std::countr_zero(targets));
          last = x;
          break;
        }
        for (std::uint64_t m = adj[x] & frag.interior; m; m &= m - 1) {
          const auto y = std::size_t(std::countr_zero(m));
          if (prev[y] == n) {
            prev[y] = x;
            queue.push_back(y);
          }
        }
      }
      std::vector<std::size_t> interior;
      for (std::size_t x = last; x != entry; x = prev[x]) interior.push_back(x);
      interior.push_back(entry);
      std::reverse(interior.begin(), interior.end());
      path.push_back(start);
      path.insert(path.end(), interior.begin(), interior.end());
      path.push_back(end);
    }

    // Split the face along the path.
    const auto face = faces[chosen_face];
    const std::size_t u = path.front(), w = path.back();
    const auto pos_u = std::size_t(std::find(face.begin(), face.end(), u) - face.begin());
    const auto pos_w = std::size_t(std::find(face.begin(), face.end(), w) - face.begin());
    std::vector<std::size_t> face1, face2;
    for (std::size_t i = pos_u;; i = (i + 1) % face.size()) {
      face1.push_back(face[i]);
      if (i == pos_w) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) face1.push_back(path[i]);
    for (std::size_t i = pos_w;; i = (i + 1) % face.size()) {
      face2.push_back(face[i]);
      if (i == pos_u) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) face2.push_back(path[i]);
    faces[chosen_face] = std::move(face1);
    faces.push_back(std::move(face2));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      placed |= bit(path[i]) | bit(path[i + 1]);
      embed_edge(path[i], path[i + 1]);
    }
  }
  return true;
}

inline bool planar_masks(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  std::size_t m = 0;
  for (auto row : adj) m += std::size_t(std::popcount(row));
  m /= 2;
  if (n >= 3 && m > 3 * n - 6) return false;
  for (const auto& block : BlockFinder(adj).run())
    if (!block_is_planar(block, n)) return false;
  return true;
}

inline KuratowskiWitness extract_kuratowski(const SimpleGraph& g) {
  auto adj = adjacency_masks(g);
  for (auto [u, v] : g.edges()) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
    if (planar_masks(adj)) {
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
  }
  KuratowskiWitness w;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (std::popcount(adj[u]) >= 3) w.branch_vertices.push_back(u);
    for (std::uint64_t m = adj[u]; m; m &= m - 1) {
      const auto v = std::size_t(std::countr_zero(m));
      if (u < v) w.edges.emplace_back(u, v);
    }
  }
  w.kind = w.branch_vertices.size() == 5 ? "K5" : "K3,3";
  return w;
}

}  // namespace detail

// Exact planarity: Euler bound, then per biconnected block a
// Demoucron-Malgrange-Pertuiset embedding. With `want_witness`, a non-planar
// answer carries a Kuratowski subdivision found by greedy edge deletion.
inline PlanarityResult is_planar(const SimpleGraph& g, const SolverBudget& budget = {},
                                 bool want_witness = false) {
  detail::require_budget("is_planar", g.vertex_count(), budget.exact_vertices);
  PlanarityResult r;
  r.planar = detail::planar_masks(detail::adjacency_masks(g));
  if (!r.planar && want_witness) r.witness = detail::extract_kuratowski(g);
  return r;
}

}  // namespace nspg
