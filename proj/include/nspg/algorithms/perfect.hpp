#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nspg/algorithms/basic.hpp"
#include "nspg/error.hpp"
#include "nspg/graph.hpp"

namespace nspg {

struct PerfectResult {
  bool perfect = true;
  std::vector<std::size_t> odd_hole;  // induced odd cycle of length >= 5, if any
  bool hole_in_complement = false;
};

namespace detail {

// Enumerates induced paths p0 < p1, ..., pk (p0 the smallest vertex) and
// reports the first closure into an induced odd cycle of length >= 5.
class OddHoleSearch {
 public:
  explicit OddHoleSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::optional<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < adj_.size(); ++s) {
      path_ = {s};
      const std::uint64_t above = ~low_bits(s + 1);
      if (extend(above, std::uint64_t{1} << s)) return path_;
    }
    return std::nullopt;
  }

 private:
  // `blocked`: p0 plus the closed neighbourhoods of p1..p(k-1).
  bool extend(std::uint64_t allowed, std::uint64_t blocked) {
    const std::size_t k = path_.size() - 1;
    const std::size_t head = path_.front(), tail = path_.back();
    for (std::uint64_t m = adj_[tail] & allowed & ~blocked; m; m &= m - 1) {
      const auto x = std::size_t(std::countr_zero(m));
      const std::uint64_t xbit = std::uint64_t{1} << x;
      if (k >= 1 && (adj_[head] & xbit)) {
        // x closes a cycle of length k + 2; it cannot extend the path.
        if (k >= 2 && (k + 2) % 2 == 1 && k + 2 >= 5) {
          path_.push_back(x);
          return true;
        }
        continue;
      }
      const std::uint64_t next_blocked =
          k >= 1 ? blocked | adj_[tail] | (std::uint64_t{1} << tail) : blocked;
      path_.push_back(x);
      if (extend(allowed, next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> path_;
};

}  // namespace detail

// Induced odd cycle of length >= 5 in g, if one exists.
inline std::optional<std::vector<std::size_t>> find_odd_hole(const SimpleGraph& g) {
  detail::require_budget("find_odd_hole", g.vertex_count(), kMaxExactVertices);
  return detail::OddHoleSearch(detail::adjacency_masks(g)).run();
}

// Perfect iff neither g nor its complement has an odd hole.
inline PerfectResult is_perfect(const SimpleGraph& g, const SolverBudget& budget = {}) {
  if (g.vertex_count() > budget.perfect_vertices)
    throw BudgetExceeded("is_perfect: " + std::to_string(g.vertex_count()) +
                         " vertices exceed the odd-hole budget of " +
                         std::to_string(budget.perfect_vertices));
  PerfectResult r;
  if (auto hole = find_odd_hole(g)) {
    r.perfect = false;
    r.odd_hole = std::move(*hole);
  } else if (auto anti = find_odd_hole(g.complement())) {
    r.perfect = false;
    r.odd_hole = std::move(*anti);
    r.hole_in_complement = true;
  }
  return r;
}

}  // namespace nspg
