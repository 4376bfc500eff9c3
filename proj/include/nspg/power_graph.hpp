#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nspg/error.hpp"
#include "nspg/graph.hpp"
#include "nspg/group.hpp"
#include "nspg/subgroup.hpp"

namespace nspg {

// Power graph: distinct u, v adjacent iff one lies in the cyclic subgroup
// generated by the other. Vertex i is element i; vertex 0 is the identity.
inline SimpleGraph power_graph(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> cyclic(n, Bitset(n));
  for (Element a = 0; a < n; ++a) {
    Element x = kIdentity;
    do {
      cyclic[a].set(x);
      x = g.multiply(x, a);
    } while (x != kIdentity);
  }
  SimpleGraph out(g.labels());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (cyclic[u].test(v) || cyclic[v].test(u)) out.add_edge(u, v);
  return out;
}

// Power graph with the identity vertex removed.
inline SimpleGraph reduced_power_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw InvalidArgument("reduced power graph of the trivial group is empty");
  std::vector<std::size_t> keep;
  for (std::size_t v = 1; v < g.order(); ++v) keep.push_back(v);
  return power_graph(g).induced(keep);
}

// Power graph relative to a normal subgroup H. Vertex 0 is the identity,
// followed by the elements of G \ H in ascending index order.
struct NsbPowerGraph {
  SimpleGraph graph;
  std::string group_name;
  std::string subgroup;
  std::vector<Element> vertex_element;
  std::vector<std::size_t> coset_of;  // coset index in G/H, per vertex
};

namespace detail {

inline void check_nsb_inputs(const FiniteGroup& g, const SubgroupSet& h) {
  if (!h.parent().same_table(g)) throw InvalidArgument("subgroup does not belong to this group");
  if (!is_normal(g, h)) throw InvalidArgument("subgroup " + describe(h) + " is not normal in " + g.name());
  if (h.is_whole_group())
    throw InvalidArgument("subgroup must be proper: H = G leaves only the identity vertex");
}

inline NsbPowerGraph nsb_skeleton(const FiniteGroup& g, const SubgroupSet& h) {
  NsbPowerGraph out;
  out.group_name = g.name();
  out.subgroup = describe(h);
  const auto cosets = coset_partition(g, h);
  std::vector<std::string> labels;
  for (Element a = 0; a < g.order(); ++a) {
    if (a != kIdentity && h.contains(a)) continue;
    out.vertex_element.push_back(a);
    out.coset_of.push_back(cosets[a]);
    labels.push_back(g.label(a));
  }
  out.graph = SimpleGraph(std::move(labels));
  return out;
}

}  // namespace detail

// Direct construction: x ~ y iff xH = y^m H or yH = x^m H for some m >= 1.
// Coset equality aH = bH is decided as a^-1 b in H; the exponent scan is
// bounded by the element order since powers repeat with that period.
inline NsbPowerGraph nsb_power_graph(const FiniteGroup& g, const SubgroupSet& h) {
  detail::check_nsb_inputs(g, h);
  auto out = detail::nsb_skeleton(g, h);
  const auto same_coset = [&](Element a, Element b) {
    return h.contains(g.multiply(g.inverse(a), b));
  };
  // x H is a power of y H.
  const auto coset_power_of = [&](Element x, Element y) {
    const std::size_t period = element_order(g, y);
    Element power = y;
    for (std::size_t m = 1; m <= period; ++m) {
      if (same_coset(x, power)) return true;
      power = g.multiply(power, y);
    }
    return false;
  };
  const auto& elems = out.vertex_element;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (coset_power_of(elems[i], elems[j]) || coset_power_of(elems[j], elems[i]))
        out.graph.add_edge(i, j);
  return out;
}

// Construction through the quotient: each non-identity coset becomes a
// clique, two cosets are fully joined iff adjacent in the power graph of
// G/H, and the identity is joined to everything.
inline NsbPowerGraph expand_quotient_graph(const QuotientGroup& q, const SubgroupSet& h) {
  if (!(q.kernel == h)) throw InvalidArgument("quotient was not built from this subgroup");
  detail::check_nsb_inputs(q.source, h);
  auto out = detail::nsb_skeleton(q.source, h);
  const SimpleGraph quotient_graph = power_graph(q.group);
  const std::size_t n = out.vertex_element.size();
  for (std::size_t j = 1; j < n; ++j) out.graph.add_edge(0, j);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t ci = q.projection[out.vertex_element[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t cj = q.projection[out.vertex_element[j]];
      if (ci == cj || quotient_graph.has_edge(ci, cj)) out.graph.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace nspg
