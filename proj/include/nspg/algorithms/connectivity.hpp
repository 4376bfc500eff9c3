#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/graph.hpp"

namespace nspg {

struct ConnectivityResult {
  std::size_t kappa = 0;
  std::vector<std::size_t> cut;  // a minimum separating set (ascending)
};

namespace detail {

// Unit-capacity vertex-disjoint path counting on the split digraph:
// v_in = 2v, v_out = 2v + 1, arc v_in -> v_out of capacity 1 (unbounded
// for the terminals), and v_out -> u_in unbounded for every edge uv.
class SplitFlow {
 public:
  explicit SplitFlow(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {}

  // Max number of internally vertex-disjoint s-t paths, capped at `limit`.
  // When the result is below `limit`, cut() holds a minimum s-t separator.
  std::size_t max_paths(std::size_t s, std::size_t t, std::size_t limit) {
    const std::size_t nodes = 2 * n_;
    const int inf = int(n_) + 1;
    cap_.assign(nodes * nodes, 0);
    for (std::size_t v = 0; v < n_; ++v) cap_[idx(2 * v, 2 * v + 1)] = (v == s || v == t) ? inf : 1;
    for (auto [u, v] : g_.edges()) {
      cap_[idx(2 * u + 1, 2 * v)] = inf;
      cap_[idx(2 * v + 1, 2 * u)] = inf;
    }
    const std::size_t source = 2 * s + 1, sink = 2 * t;
    std::size_t flow = 0;
    std::vector<std::size_t> prev(nodes);
    while (flow < limit) {
      constexpr auto npos = static_cast<std::size_t>(-1);
      std::fill(prev.begin(), prev.end(), npos);
      prev[source] = source;
      std::deque<std::size_t> queue{source};
      while (!queue.empty() && prev[sink] == npos) {
        const auto x = queue.front();
        queue.pop_front();
        for (std::size_t y = 0; y < nodes; ++y)
          if (prev[y] == npos && cap_[idx(x, y)] > 0) {
            prev[y] = x;
            queue.push_back(y);
          }
      }
      if (prev[sink] == npos) {
        // Residual reachability marks the source side; saturated split arcs
        // crossing it form the separator.
        cut_.clear();
        for (std::size_t v = 0; v < n_; ++v)
          if (prev[2 * v] != npos && prev[2 * v + 1] == npos) cut_.push_back(v);
        return flow;
      }
      for (std::size_t y = sink; y != source; y = prev[y]) {
        --cap_[idx(prev[y], y)];
        ++cap_[idx(y, prev[y])];
      }
      ++flow;
    }
    return flow;
  }

  const std::vector<std::size_t>& cut() const noexcept { return cut_; }

 private:
  std::size_t idx(std::size_t a, std::size_t b) const noexcept { return a * 2 * n_ + b; }

  const SimpleGraph& g_;
  std::size_t n_;
  std::vector<int> cap_;
  std::vector<std::size_t> cut_;
};

}  // namespace detail

// Vertex connectivity by Menger's theorem. K_n gives n - 1 (its cut is the
// last n - 1 vertices), a disconnected graph gives 0 with an empty cut.
// Pairs are scanned as in Even's algorithm: sources v_0, v_1, ... while the
// source index does not exceed the best value found so far.
inline ConnectivityResult vertex_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  ConnectivityResult r;
  if (n == 0) return r;
  if (!is_connected(g)) return r;
  if (g.edge_count() == n * (n - 1) / 2) {
    r.kappa = n - 1;
    for (std::size_t v = 1; v < n; ++v) r.cut.push_back(v);
    return r;
  }
  detail::SplitFlow flow(g);
  r.kappa = n - 1;
  for (std::size_t s = 0; s < n && s <= r.kappa; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      const std::size_t paths = flow.max_paths(s, t, r.kappa);
      if (paths < r.kappa) {
        r.kappa = paths;
        r.cut = flow.cut();
      }
    }
  }
  std::sort(r.cut.begin(), r.cut.end());
  return r;
}

}  // namespace nspg
