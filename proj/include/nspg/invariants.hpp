#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspg/algorithms/basic.hpp"
#include "nspg/algorithms/clique.hpp"
#include "nspg/algorithms/coloring.hpp"
#include "nspg/algorithms/connectivity.hpp"
#include "nspg/algorithms/hamiltonian.hpp"
#include "nspg/algorithms/perfect.hpp"
#include "nspg/algorithms/planarity.hpp"
#include "nspg/error.hpp"
#include "nspg/graph.hpp"

namespace nspg {

// Everything the analyzer reports about one graph. Solver-backed fields are
// empty when their solver refused the instance; `budget_exceeded` says why.
struct GraphInvariants {
  BasicInvariants basic;
  std::size_t girth = kInfiniteGirth;
  std::optional<CliqueResult> clique;
  std::optional<ColoringResult> coloring;
  ConnectivityResult connectivity;
  std::optional<PlanarityResult> planarity;
  std::optional<PerfectResult> perfect;
  std::optional<bool> is_hamiltonian;
  std::vector<std::size_t> hamiltonian_cycle;
  std::vector<std::string> budget_exceeded;

  bool complete() const noexcept { return budget_exceeded.empty(); }
};

inline GraphInvariants compute_invariants(const SimpleGraph& g, const SolverBudget& budget = {}) {
  GraphInvariants inv;
  inv.basic = basic_invariants(g);
  inv.girth = girth(g);
  inv.connectivity = vertex_connectivity(g);
  const auto attempt = [&](auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      inv.budget_exceeded.emplace_back(e.what());
    }
  };
  attempt([&] { inv.clique = clique_number(g, budget); });
  attempt([&] { inv.coloring = chromatic_number(g, budget); });
  attempt([&] { inv.planarity = is_planar(g, budget, true); });
  attempt([&] { inv.perfect = is_perfect(g, budget); });
  attempt([&] {
    auto cycle = hamiltonian_cycle(g, budget);
    inv.is_hamiltonian = cycle.has_value();
    if (cycle) inv.hamiltonian_cycle = std::move(*cycle);
  });
  return inv;
}

// Flat object with stable key order; witnesses under "witnesses".
inline nlohmann::ordered_json to_json(const GraphInvariants& inv) {
  using nlohmann::ordered_json;
  ordered_json j;
  const auto& b = inv.basic;
  j["vertex_count"] = b.vertex_count;
  j["edge_count"] = b.edge_count;
  j["degree_sequence"] = b.degree_sequence;
  j["is_connected"] = b.is_connected;
  j["is_complete"] = b.is_complete;
  j["is_regular"] = b.is_regular;
  j["is_bipartite"] = b.is_bipartite;
  j["is_tree"] = b.is_tree;
  j["is_eulerian"] = b.is_eulerian;
  if (inv.girth == kInfiniteGirth) j["girth"] = "infinite";
  else j["girth"] = inv.girth;
  j["clique_number"] = inv.clique ? ordered_json(inv.clique->size) : ordered_json(nullptr);
  j["chromatic_number"] =
      inv.coloring ? ordered_json(inv.coloring->chromatic_number) : ordered_json(nullptr);
  j["vertex_connectivity"] = inv.connectivity.kappa;
  j["is_planar"] = inv.planarity ? ordered_json(inv.planarity->planar) : ordered_json(nullptr);
  j["is_perfect"] = inv.perfect ? ordered_json(inv.perfect->perfect) : ordered_json(nullptr);
  j["is_hamiltonian"] = inv.is_hamiltonian ? ordered_json(*inv.is_hamiltonian) : ordered_json(nullptr);

  ordered_json w = ordered_json::object();
  if (inv.clique) w["clique"] = inv.clique->witness;
  if (inv.coloring) w["coloring"] = inv.coloring->colors;
  if (b.is_connected && !b.is_complete) w["vertex_cut"] = inv.connectivity.cut;
  if (!inv.hamiltonian_cycle.empty()) w["hamiltonian_cycle"] = inv.hamiltonian_cycle;
  if (inv.perfect && !inv.perfect->perfect) {
    w["odd_hole"] = inv.perfect->odd_hole;
    w["odd_hole_in_complement"] = inv.perfect->hole_in_complement;
  }
  if (inv.planarity && inv.planarity->witness) {
    const auto& k = *inv.planarity->witness;
    ordered_json kw;
    kw["kind"] = k.kind;
    kw["branch_vertices"] = k.branch_vertices;
    auto edges = ordered_json::array();
    for (auto [u, v] : k.edges) edges.push_back({u, v});
    kw["edges"] = std::move(edges);
    w["kuratowski"] = std::move(kw);
  }
  j["witnesses"] = std::move(w);
  j["budget_exceeded"] = inv.budget_exceeded;
  return j;
}

namespace detail {

inline std::string join_numbers(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace detail

// Fixed-width two-column table; "null" where a solver refused.
inline std::string to_table(const GraphInvariants& inv) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  const auto row = [&](const char* key, const std::string& value) {
    os << std::left << std::setw(22) << key << value << '\n';
  };
  const auto flag = [](bool v) { return std::string(v ? "true" : "false"); };
  const auto opt_num = [](const auto& o, auto get) { return o ? std::to_string(get(*o)) : std::string("null"); };
  const auto& b = inv.basic;
  row("vertex_count", std::to_string(b.vertex_count));
  row("edge_count", std::to_string(b.edge_count));
  row("degree_sequence", detail::join_numbers(b.degree_sequence));
  row("is_connected", flag(b.is_connected));
  row("is_complete", flag(b.is_complete));
  row("is_regular", flag(b.is_regular));
  row("is_bipartite", flag(b.is_bipartite));
  row("is_tree", flag(b.is_tree));
  row("is_eulerian", flag(b.is_eulerian));
  row("girth", inv.girth == kInfiniteGirth ? "infinite" : std::to_string(inv.girth));
  row("clique_number", opt_num(inv.clique, [](const auto& c) { return c.size; }));
  row("chromatic_number", opt_num(inv.coloring, [](const auto& c) { return c.chromatic_number; }));
  row("vertex_connectivity", std::to_string(inv.connectivity.kappa));
  row("is_planar", inv.planarity ? flag(inv.planarity->planar) : "null");
  row("is_perfect", inv.perfect ? flag(inv.perfect->perfect) : "null");
  row("is_hamiltonian", inv.is_hamiltonian ? flag(*inv.is_hamiltonian) : "null");
  if (inv.clique) row("clique", detail::join_numbers(inv.clique->witness));
  if (inv.coloring) row("coloring", detail::join_numbers(inv.coloring->colors));
  if (!inv.hamiltonian_cycle.empty()) row("hamiltonian_cycle", detail::join_numbers(inv.hamiltonian_cycle));
  for (const auto& reason : inv.budget_exceeded) row("budget_exceeded", reason);
  return os.str();
}

}  // namespace nspg
